//! Hereditary block terms shared by Ackermann normal forms and Veblen terms.
//!
//! A term is a (possibly empty) sum of blocks `H(index, arg) * coeff`, stored
//! flat so that long sums do not become deep linked lists.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Nat;

pub trait Kind: Copy + Send + Sync + 'static {
    const HEAD: &'static str;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Ack;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Veblen;

impl Kind for Ack {
    const HEAD: &'static str = "A";
}

impl Kind for Veblen {
    const HEAD: &'static str = "phi";
}

pub struct Block<K> {
    pub index: Term<K>,
    pub arg: Term<K>,
    pub coeff: Nat,
}

pub struct Term<K> {
    blocks: Arc<[Block<K>]>,
    start: usize,
    _kind: PhantomData<K>,
}

/// Node-style view of a term: `Zero` or `head * coeff + rest`.
pub enum View<'a, K> {
    Zero,
    Node {
        index: &'a Term<K>,
        arg: &'a Term<K>,
        coeff: &'a Nat,
        rest: Term<K>,
    },
}

impl<K> Clone for Block<K> {
    fn clone(&self) -> Self {
        Block {
            index: self.index.clone(),
            arg: self.arg.clone(),
            coeff: self.coeff.clone(),
        }
    }
}

impl<K> Clone for Term<K> {
    fn clone(&self) -> Self {
        Term {
            blocks: self.blocks.clone(),
            start: self.start,
            _kind: PhantomData,
        }
    }
}

impl<K> PartialEq for Block<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeff == other.coeff && self.index == other.index && self.arg == other.arg
    }
}
impl<K> Eq for Block<K> {}

impl<K> PartialEq for Term<K> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.blocks(), other.blocks());
        std::ptr::eq(a, b) || a == b
    }
}
impl<K> Eq for Term<K> {}

impl<K> Hash for Block<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.index.hash(state);
        self.arg.hash(state);
        self.coeff.hash(state);
    }
}

impl<K> Hash for Term<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let b = self.blocks();
        b.len().hash(state);
        for x in b {
            x.hash(state);
        }
    }
}

impl<K> Block<K> {
    pub fn new(index: Term<K>, arg: Term<K>, coeff: Nat) -> Self {
        Block { index, arg, coeff }
    }

    /// Same index and argument.
    pub fn same_head(&self, other: &Block<K>) -> bool {
        self.index == other.index && self.arg == other.arg
    }
}

impl<K> Default for Term<K> {
    fn default() -> Self {
        Term::zero()
    }
}

impl<K> Term<K> {
    pub fn zero() -> Self {
        Term::from_blocks(Vec::new())
    }

    pub fn from_blocks(blocks: Vec<Block<K>>) -> Self {
        Term {
            blocks: blocks.into(),
            start: 0,
            _kind: PhantomData,
        }
    }

    /// `H(0,0)`, the term for 1 in every base.
    pub fn one() -> Self {
        Term::single(Term::zero(), Term::zero())
    }

    pub fn single(index: Term<K>, arg: Term<K>) -> Self {
        Term::from_blocks(vec![Block::new(index, arg, Nat::one())])
    }

    pub fn node(index: Term<K>, arg: Term<K>, coeff: Nat, rest: &Term<K>) -> Self {
        let mut v = Vec::with_capacity(rest.len() + 1);
        v.push(Block::new(index, arg, coeff));
        v.extend(rest.blocks().iter().cloned());
        Term::from_blocks(v)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks().is_empty()
    }

    pub fn len(&self) -> usize {
        self.blocks.len() - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn blocks(&self) -> &[Block<K>] {
        &self.blocks[self.start..]
    }

    pub fn head(&self) -> Option<&Block<K>> {
        self.blocks().first()
    }

    pub fn last(&self) -> Option<&Block<K>> {
        self.blocks().last()
    }

    /// Everything after the head block.
    pub fn rest(&self) -> Term<K> {
        if self.is_zero() {
            return self.clone();
        }
        Term {
            blocks: self.blocks.clone(),
            start: self.start + 1,
            _kind: PhantomData,
        }
    }

    pub fn view(&self) -> View<'_, K> {
        match self.head() {
            None => View::Zero,
            Some(b) => View::Node {
                index: &b.index,
                arg: &b.arg,
                coeff: &b.coeff,
                rest: self.rest(),
            },
        }
    }

    /// A single block with coefficient 1 and nothing after it.
    pub fn as_single(&self) -> Option<&Block<K>> {
        match self.blocks() {
            [b] if b.coeff.is_one() => Some(b),
            _ => None,
        }
    }

    /// Same tree, reinterpreted in another kind.
    pub fn retag<K2>(&self) -> Term<K2> {
        Term::from_blocks(
            self.blocks()
                .iter()
                .map(|b| Block::new(b.index.retag(), b.arg.retag(), b.coeff.clone()))
                .collect(),
        )
    }

    /// Applies `f` to index and argument of every block, keeping coefficients.
    pub fn map_blocks(&self, f: &mut impl FnMut(&Term<K>) -> Term<K>) -> Term<K> {
        Term::from_blocks(
            self.blocks()
                .iter()
                .map(|b| Block::new(f(&b.index), f(&b.arg), b.coeff.clone()))
                .collect(),
        )
    }

    pub fn depth(&self) -> usize {
        self.blocks()
            .iter()
            .map(|b| 1 + b.index.depth().max(b.arg.depth()))
            .max()
            .unwrap_or(0)
    }

    /// Number of blocks in the whole tree.
    pub fn size(&self) -> usize {
        self.blocks()
            .iter()
            .map(|b| 1 + b.index.size() + b.arg.size())
            .sum()
    }
}

/// Term norm: `|0| = 1`, `|H(i,a) + r| = |i| + |a| + |r|`, a coefficient `p`
/// counting as `p` repetitions of its block.
pub fn term_norm<K>(t: &Term<K>) -> Nat {
    let mut total = Nat::one();
    for b in t.blocks() {
        total += &b.coeff * (term_norm(&b.index) + term_norm(&b.arg));
    }
    total
}

impl<K: Kind> fmt::Display for Term<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, b) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}({},{})", K::HEAD, b.index, b.arg)?;
            if !b.coeff.is_one() {
                write!(f, "*{}", b.coeff)?;
            }
        }
        Ok(())
    }
}

impl<K: Kind> fmt::Debug for Term<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: Kind> std::str::FromStr for Term<K> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

pub fn print<K: Kind>(t: &Term<K>) -> String {
    t.to_string()
}

/// Parses `term := "0" | block ("+" block)*`, `block := HEAD "(" term "," term ")" ("*" nat)?`.
/// Whitespace is ignored; error positions are byte offsets into `s`.
pub fn parse<K: Kind>(s: &str) -> Result<Term<K>> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let t = p.term::<K>()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.err(&format!("expected `{lit}`")))
        }
    }

    fn nat(&mut self) -> Result<Nat> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a decimal number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigUint>().expect("decimal digits"))
    }

    fn term<K: Kind>(&mut self) -> Result<Term<K>> {
        if self.peek() == Some(b'0') {
            self.pos += 1;
            return Ok(Term::zero());
        }
        let mut blocks = vec![self.block::<K>()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            blocks.push(self.block::<K>()?);
        }
        Ok(Term::from_blocks(blocks))
    }

    fn block<K: Kind>(&mut self) -> Result<Block<K>> {
        self.expect(K::HEAD)?;
        self.expect("(")?;
        let index = self.term::<K>()?;
        self.expect(",")?;
        let arg = self.term::<K>()?;
        self.expect(")")?;
        let coeff = if self.peek() == Some(b'*') {
            self.pos += 1;
            let at = self.pos;
            let c = self.nat()?;
            if c.is_zero() {
                return Err(Error::Syntax {
                    pos: at,
                    msg: "coefficient must be at least 1".into(),
                });
            }
            c
        } else {
            Nat::one()
        };
        Ok(Block::new(index, arg, coeff))
    }
}

impl<K: Kind> serde::Serialize for Term<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, K: Kind> serde::Deserialize<'de> for Term<K> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type T = Term<Ack>;

    #[test]
    fn parse_examples() {
        let t: T = parse("A(0,0)").unwrap();
        assert_eq!(t, T::one());
        let t: T = parse(" A(0, A(0,0)) * 2 + A(0,0)").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.head().unwrap().coeff, Nat::from(2u8));
        assert_eq!(t.to_string(), "A(0,A(0,0))*2+A(0,0)");
        let s = "A(A(0,0),0)";
        assert_eq!(parse::<Ack>(s).unwrap().to_string(), s);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse::<Ack>("A(0,0)+") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(parse::<Ack>("A(0,0)*0").is_err());
        assert!(parse::<Ack>("A(0,0) x").is_err());
        assert!(parse::<Veblen>("A(0,0)").is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(term_norm(&T::zero()), Nat::one());
        assert_eq!(term_norm(&T::one()), Nat::from(3u8));
        let t: T = parse("A(0,0)*2").unwrap();
        assert_eq!(term_norm(&t), Nat::from(5u8));
    }

    #[test]
    fn rest_views_share_storage() {
        let t: T = parse("A(0,A(0,0))+A(0,0)").unwrap();
        assert_eq!(t.rest(), T::one());
        assert!(t.rest().rest().is_zero());
        assert!(matches!(t.view(), View::Node { .. }));
    }
}
