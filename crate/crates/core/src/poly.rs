//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients over the coordinates `x[i,j]`, and exact determinants of
//! matrices whose entries are constants or single coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tableau::MatrixUnit;

/// The coordinate `x[i,j]`. Diagonal coordinates are allowed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub i: usize,
    pub j: usize,
}

impl Var {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }
}

impl From<MatrixUnit> for Var {
    fn from(u: MatrixUnit) -> Self {
        Var { i: u.i, j: u.j }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.i, self.j)
    }
}

/// Product of variables with positive exponents, sorted by variable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[x].0, a[x].1 + b[y].1));
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Map from monomial to nonzero coefficient. The empty map is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Maximal total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// `Some((c, v))` when the polynomial is `c * v` for a single variable.
    pub fn as_scaled_var(&self) -> Option<(BigInt, Var)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        match m.powers() {
            [(v, 1)] => Some((c.clone(), *v)),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_var(&self, v: Var) -> Polynomial {
        let vm = Monomial::var(v);
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(&vm), k.clone()))
                .collect(),
        }
    }

    /// Replaces the assigned variables by constants or other variables.
    pub fn substitute(&self, assignment: &BTreeMap<Var, Subst>) -> Polynomial {
        let mut out = Polynomial::zero();
        'terms: for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut powers = Vec::with_capacity(m.powers().len());
            for &(v, e) in m.powers() {
                match assignment.get(&v) {
                    None => powers.push((v, e)),
                    Some(Subst::Var(w)) => powers.push((*w, e)),
                    Some(Subst::Const(k)) => {
                        if k.is_zero() {
                            continue 'terms;
                        }
                        coef *= num_traits::pow(k.clone(), e as usize);
                    }
                }
            }
            out.add_term(Monomial::from_powers(powers), coef);
        }
        out
    }

    /// The homogeneous component of maximal total degree.
    pub fn top_term(&self) -> Result<Polynomial> {
        let d = self.degree().ok_or(Error::UndefinedGrading)?;
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Variables appearing in the polynomial, ascending.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

/// Replacement for a variable in [`Polynomial::substitute`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subst {
    Const(BigInt),
    Var(Var),
}

impl Subst {
    pub fn zero() -> Self {
        Subst::Const(BigInt::zero())
    }

    pub fn one() -> Self {
        Subst::Const(BigInt::one())
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Deterministic: terms in ascending monomial order, e.g.
    /// `x[1,2]*x[2,3] - x[1,3]*x[2,2] + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the format produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidInput(format!("cannot parse polynomial `{s}`: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Polynomial::zero();
        let mut chunks = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for (k, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && k > start {
                chunks.push(&compact[start..k]);
                start = k;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes()[0] {
                b'-' => (-1, &chunk[1..]),
                b'+' => (1, &chunk[1..]),
                _ => (1, chunk),
            };
            let mut coef = BigInt::from(sign);
            let mut powers = Vec::new();
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix("x[") {
                    let (inside, exp) = match rest.split_once(']') {
                        Some((inside, tail)) => (inside, tail),
                        None => return Err(bad("unclosed bracket")),
                    };
                    let (i, j) = inside.split_once(',').ok_or_else(|| bad("missing comma"))?;
                    let i = i.parse().map_err(|_| bad("bad index"))?;
                    let j = j.parse().map_err(|_| bad("bad index"))?;
                    let e = match exp.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| bad("bad exponent"))?,
                        None if exp.is_empty() => 1,
                        None => return Err(bad("trailing characters")),
                    };
                    powers.push((Var::new(i, j), e));
                } else {
                    let k: BigInt = factor.parse().map_err(|_| bad("bad coefficient"))?;
                    coef *= k;
                }
            }
            out.add_term(Monomial::from_powers(powers), coef);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Const(BigInt),
    Var(Var),
}

impl Entry {
    pub fn is_zero(&self) -> bool {
        matches!(self, Entry::Const(c) if c.is_zero())
    }
}

/// Square matrix of constants and single variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    size: usize,
    entries: Vec<Entry>,
}

impl SymbolicMatrix {
    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![Entry::Const(BigInt::zero()); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for k in 0..size {
            m.set(k, k, Entry::Const(BigInt::one()));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Entry>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        Ok(Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &Entry {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: Entry) {
        self.entries[r * self.size + c] = e;
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }
}

/// Exact determinant by Laplace expansion down the columns, emptiest column
/// first, memoised on the set of rows already consumed. Zero entries are
/// never expanded, so sparse minors stay cheap.
pub fn det(m: &SymbolicMatrix) -> Polynomial {
    let n = m.size();
    if n == 0 {
        return Polynomial::one();
    }
    assert!(n <= 64, "determinant of size {n} is beyond the row bitmask");
    let col_rows: Vec<Vec<(usize, &Entry)>> = (0..n)
        .map(|c| {
            (0..n)
                .map(|r| (r, m.get(r, c)))
                .filter(|(_, e)| !e.is_zero())
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| col_rows[c].len());
    if col_rows[order[0]].is_empty() {
        return Polynomial::zero();
    }

    struct Expander<'a> {
        order: Vec<usize>,
        col_rows: Vec<Vec<(usize, &'a Entry)>>,
        memo: HashMap<u64, Polynomial>,
    }

    impl Expander<'_> {
        fn minor(&mut self, k: usize, used: u64) -> Polynomial {
            if k == self.order.len() {
                return Polynomial::one();
            }
            if let Some(p) = self.memo.get(&used) {
                return p.clone();
            }
            let c = self.order[k];
            let mut acc = Polynomial::zero();
            for idx in 0..self.col_rows[c].len() {
                let (r, entry) = self.col_rows[c][idx];
                if used >> r & 1 == 1 {
                    continue;
                }
                let sub = self.minor(k + 1, used | 1 << r);
                if sub.is_zero() {
                    continue;
                }
                let term = match entry {
                    Entry::Const(v) => sub.scale(v),
                    Entry::Var(v) => sub.mul_var(*v),
                };
                // position of r among the rows still free
                let below_mask = (1u64 << r) - 1;
                let position = (below_mask & !used).count_ones();
                if position.is_multiple_of(2) {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            self.memo.insert(used, acc.clone());
            acc
        }
    }

    let sign = permutation_sign(&order);
    let mut ex = Expander {
        order,
        col_rows,
        memo: HashMap::new(),
    };
    let d = ex.minor(0, 0);
    if sign < 0 {
        -&d
    } else {
        d
    }
}

/// `+1` or `-1`.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, j: usize) -> Entry {
        Entry::Var(Var::new(i, j))
    }

    fn c(k: i64) -> Entry {
        Entry::Const(BigInt::from(k))
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two_cofactor() {
        let m = SymbolicMatrix::from_rows(vec![vec![x(1, 2), x(1, 3)], vec![x(2, 2), x(2, 3)]])
            .unwrap();
        assert_eq!(det(&m), p("x[1,2]*x[2,3] - x[1,3]*x[2,2]"));
    }

    #[test]
    fn identity_and_singular() {
        for n in 0..6 {
            assert_eq!(det(&SymbolicMatrix::identity(n)), Polynomial::one());
        }
        let m = SymbolicMatrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]).unwrap();
        assert!(det(&m).is_zero());
        let m = SymbolicMatrix::from_rows(vec![vec![c(0), x(1, 2)], vec![c(0), c(3)]]).unwrap();
        assert!(det(&m).is_zero());
    }

    #[test]
    fn constants_follow_row_swaps() {
        let m = SymbolicMatrix::from_rows(vec![
            vec![c(0), c(0), c(2)],
            vec![c(0), c(3), c(0)],
            vec![c(5), c(0), c(0)],
        ])
        .unwrap();
        assert_eq!(det(&m), Polynomial::constant(-30));
    }

    #[test]
    fn substitution_examples() {
        let mut a = BTreeMap::new();
        a.insert(Var::new(3, 4), Subst::one());
        assert_eq!(p("x[3,4]*x[2,6]").substitute(&a), p("x[2,6]"));

        let mut a = BTreeMap::new();
        a.insert(Var::new(2, 5), Subst::zero());
        a.insert(Var::new(3, 4), Subst::zero());
        assert_eq!(
            p("x[2,4]*x[3,5] - x[2,5]*x[3,4]").substitute(&a),
            p("x[2,4]*x[3,5]")
        );

        let mut a = BTreeMap::new();
        a.insert(Var::new(1, 2), Subst::Var(Var::new(2, 3)));
        assert_eq!(p("x[1,2]*x[2,3]").substitute(&a), p("x[2,3]^2"));
    }

    #[test]
    fn top_term_picks_highest_degree() {
        assert_eq!(
            p("1 + x[1,2] + x[1,2]*x[2,3]").top_term().unwrap(),
            p("x[1,2]*x[2,3]")
        );
        assert_eq!(p("5").top_term().unwrap(), p("5"));
        assert_eq!(Polynomial::zero().top_term(), Err(Error::UndefinedGrading));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "0",
            "-3",
            "x[1,2]",
            "-x[1,3]*x[2,2] + x[1,2]*x[2,3]",
            "2*x[1,2]^3*x[4,5] - 7",
        ] {
            let poly = p(s);
            assert_eq!(p(&poly.to_string()), poly, "{s}");
        }
        assert_eq!(p("x[2,3] + x[1,2]").to_string(), "x[1,2] + x[2,3]");
        assert!("x[1".parse::<Polynomial>().is_err());
        assert!("".parse::<Polynomial>().is_err());
    }

    #[test]
    fn scaled_var_detection() {
        assert_eq!(p("-x[3,6]").as_scaled_var(), Some((BigInt::from(-1), Var::new(3, 6))));
        assert_eq!(p("x[3,6]^2").as_scaled_var(), None);
        assert_eq!(p("x[3,6] + 1").as_scaled_var(), None);
    }

    #[test]
    fn sign_of_permutations() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}
