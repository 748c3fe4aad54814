//! Commutative coefficient rings: `Z`, `Q` and `Z/n`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub trait CoefficientRing: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Display + Send + Sync;

    /// `Z`, `Q` or `Zmod:n`.
    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// `1`, `-1` and the smallest positive non-unit, when nonzero and distinct.
    fn samples(&self) -> Vec<Self::Elem>;

    /// Whether the given sparse vectors are linearly independent over the ring.
    fn independent(&self, vectors: &[Vec<(usize, Self::Elem)>]) -> bool;
}

fn push_distinct<T: PartialEq>(out: &mut Vec<T>, x: T) {
    if !out.contains(&x) {
        out.push(x);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Integers;

impl CoefficientRing for Integers {
    type Elem = BigInt;

    fn name(&self) -> String {
        "Z".into()
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn parse(&self, s: &str) -> Result<BigInt> {
        BigInt::from_str(s.trim()).map_err(|_| Error::InvalidArgument(format!("bad integer `{s}`")))
    }
    fn samples(&self) -> Vec<BigInt> {
        vec![BigInt::one(), -BigInt::one(), BigInt::from(2)]
    }
    fn independent(&self, vectors: &[Vec<(usize, BigInt)>]) -> bool {
        // Over a domain, independence over Z equals independence over Q.
        let q: Vec<Vec<(usize, BigRational)>> = vectors
            .iter()
            .map(|v| v.iter().map(|(i, a)| (*i, BigRational::from_integer(a.clone()))).collect())
            .collect();
        Rationals.independent(&q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl CoefficientRing for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("bad rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
        }
    }
    fn samples(&self) -> Vec<BigRational> {
        vec![self.one(), -self.one()]
    }
    fn independent(&self, vectors: &[Vec<(usize, BigRational)>]) -> bool {
        crate::linalg::rank_rational(vectors) == vectors.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    n: u64,
}

impl IntegersMod {
    pub fn new(n: u64) -> Result<IntegersMod> {
        if n == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        Ok(IntegersMod { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.n as i128) as u64
    }
}

impl CoefficientRing for IntegersMod {
    type Elem = u64;

    fn name(&self) -> String {
        format!("Zmod:{}", self.n)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.n
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as i128 + *b as i128)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.reduce(-(*a as i128))
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as i128 * *b as i128)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n as i128)
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let v = BigInt::from_str(s.trim()).map_err(|_| Error::InvalidArgument(format!("bad integer `{s}`")))?;
        let r = v.mod_floor(&BigInt::from(self.n));
        Ok(u64::try_from(r).expect("residue fits"))
    }
    fn samples(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for x in [self.one(), self.neg(&self.one())] {
            if x != 0 {
                push_distinct(&mut out, x);
            }
        }
        if let Some(r) = (2..self.n).find(|r| r.gcd(&self.n) != 1) {
            push_distinct(&mut out, r);
        }
        out
    }
    /// Independent over `Z/n` iff of full rank modulo every prime `p | n`.
    fn independent(&self, vectors: &[Vec<(usize, u64)>]) -> bool {
        if self.n == 1 {
            return vectors.is_empty();
        }
        prime_factors(self.n).into_iter().all(|p| crate::linalg::rank_mod_p(vectors, p) == vectors.len())
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Ring chosen at run time, as in `--ring Z|Q|Zmod:n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Z,
    Q,
    Zmod(u64),
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<RingSpec> {
        match s.trim() {
            "Z" => Ok(RingSpec::Z),
            "Q" => Ok(RingSpec::Q),
            other => {
                let n = other
                    .strip_prefix("Zmod:")
                    .and_then(|n| n.parse::<u64>().ok())
                    .filter(|n| *n > 0)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown ring `{other}` (use Z, Q or Zmod:n)")))?;
                Ok(RingSpec::Zmod(n))
            }
        }
    }
}

impl Display for RingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingSpec::Z => write!(f, "Z"),
            RingSpec::Q => write!(f, "Q"),
            RingSpec::Zmod(n) => write!(f, "Zmod:{n}"),
        }
    }
}

/// Runs `$body` with `$r` bound to the concrete ring selected by `$spec`.
#[macro_export]
macro_rules! with_ring {
    ($spec:expr, $r:ident => $body:expr) => {
        match $spec {
            $crate::ring::RingSpec::Z => {
                let $r = $crate::ring::Integers;
                $body
            }
            $crate::ring::RingSpec::Q => {
                let $r = $crate::ring::Rationals;
                $body
            }
            $crate::ring::RingSpec::Zmod(n) => {
                let $r = $crate::ring::IntegersMod::new(n).expect("positive modulus");
                $body
            }
        }
    };
}
