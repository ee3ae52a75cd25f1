//! Monomial ideals in `K[x_1, ..., x_n]` and the dimension of their quotients.
//!
//! An ideal is kept in minimal form: its generators are an antichain under
//! divisibility, stored in a canonical order so that equal ideals compare
//! equal. The number of standard monomials (monomials outside the ideal) is
//! computed two ways: [`MonomialIdeal::std_count_enum`] scans the staircase
//! box directly, while [`MonomialIdeal::std_count_recursive`] splits along
//! the short exact sequence
//!
//! ```text
//! 0 -> R/(I : x^r) -> R/I -> R/<I, x^r> -> 0
//! ```
//!
//! which gives `dim R/I = dim R/(I : x^r) + dim R/<I, x^r>`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default cap on the staircase box volume scanned by the enumerating counter.
pub const DEFAULT_MAX_BOX: u128 = 100_000_000;

/// Memo entries kept by one recursive count before the cache stops growing.
const MEMO_CAPACITY: usize = 1 << 16;

/// A monomial `x^a`, stored as its exponent vector `a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// `x_i^e` in `nvars` variables (`i` is zero-based).
    pub fn pure_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut a = vec![0; nvars];
        a[i] = e;
        Self(a)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The single variable this monomial is a power of, if any.
    pub fn pure_variable(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (support.next(), support.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    fn support_len(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    /// Degree first, then the exponent vector in descending lexicographic
    /// order (so `x1` precedes `x2`).
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a single term such as `x1^2*x3`, `x2`, or `1`. Variables are
/// one-based; the resulting exponent vector has length `nvars`.
pub fn parse_monomial(term: &str, nvars: usize) -> std::result::Result<Monomial, String> {
    let term = term.trim();
    let mut a = vec![0u32; nvars];
    if term == "1" {
        return Ok(Monomial(a));
    }
    if term.is_empty() {
        return Err("empty term".into());
    }
    for factor in term.split('*') {
        let factor = factor.trim();
        let body = factor
            .strip_prefix('x')
            .ok_or_else(|| format!("expected a variable like `x1`, found `{factor}`"))?;
        let (index, exp) = match body.split_once('^') {
            Some((i, e)) => (i.trim(), e.trim()),
            None => (body, "1"),
        };
        let index: usize = index
            .parse()
            .map_err(|_| format!("bad variable index in `{factor}`"))?;
        let exp: u32 = exp
            .parse()
            .map_err(|_| format!("bad exponent in `{factor}`"))?;
        if index == 0 || index > nvars {
            return Err(format!("variable x{index} outside x1..x{nvars}"));
        }
        a[index - 1] += exp;
    }
    Ok(Monomial(a))
}

/// Largest variable index mentioned in a term, used to infer `nvars`.
fn max_variable(term: &str) -> usize {
    term.split('*')
        .filter_map(|f| {
            let body = f.trim().strip_prefix('x')?;
            body.split('^').next()?.trim().parse::<usize>().ok()
        })
        .max()
        .unwrap_or(0)
}

/// A monomial ideal in minimal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal spanned by `gens`. The monomial
    /// `1` collapses the ideal to the unit ideal.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            all.push(g);
        }
        Ok(Self::from_checked(nvars, all))
    }

    fn from_checked(nvars: usize, mut all: Vec<Monomial>) -> Self {
        if all.iter().any(Monomial::is_one) {
            return Self::unit(nvars);
        }
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            // anything dividing m has degree <= deg m and was seen first
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort_by(Monomial::grlex_cmp);
        Self { nvars, gens: kept }
    }

    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// Ideal generated by the pure powers `x_i^{e_i}`.
    pub fn pure_powers(exponents: &[u32]) -> Self {
        let n = exponents.len();
        Self::from_checked(
            n,
            exponents
                .iter()
                .enumerate()
                .map(|(i, &e)| Monomial::pure_power(n, i, e))
                .collect(),
        )
    }

    /// Parses one generator per line in `x1^2*x2` syntax. Blank lines and
    /// `#` comments are skipped. When `nvars` is `None` it is taken to be the
    /// largest variable index mentioned.
    pub fn parse(text: &str, nvars: Option<usize>) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let nvars = nvars.unwrap_or_else(|| lines.iter().map(|(_, l)| max_variable(l)).max().unwrap_or(0));
        let mut gens = Vec::with_capacity(lines.len());
        for (line, term) in lines {
            gens.push(parse_monomial(term, nvars).map_err(|message| Error::Parse { line, message })?);
        }
        Ok(Self::from_checked(nvars, gens))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_len(m)?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    fn check_len(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                found: m.nvars(),
            });
        }
        Ok(())
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    /// `(I : x_i^r)`: each generator's `i`-th exponent drops by `r`
    /// (floored at zero). `r = 0` returns the ideal unchanged.
    pub fn colon_pure_power(&self, i: usize, r: u32) -> Result<Self> {
        self.check_var(i)?;
        Ok(self.colon_unchecked(i, r))
    }

    fn colon_unchecked(&self, i: usize, r: u32) -> Self {
        if r == 0 {
            return self.clone();
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut a = g.0.clone();
                a[i] = a[i].saturating_sub(r);
                Monomial(a)
            })
            .collect();
        Self::from_checked(self.nvars, gens)
    }

    /// `<I, x_i^r>`.
    pub fn add_pure_power(&self, i: usize, r: u32) -> Result<Self> {
        self.check_var(i)?;
        Ok(self.add_unchecked(i, r))
    }

    fn add_unchecked(&self, i: usize, r: u32) -> Self {
        let mut gens = self.gens.clone();
        gens.push(Monomial::pure_power(self.nvars, i, r));
        Self::from_checked(self.nvars, gens)
    }

    /// Sum of ideals in the same ring.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        if other.nvars != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(Self::from_checked(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    /// Smallest pure-power exponent of each variable, `None` where the ideal
    /// contains no power of that variable.
    pub fn pure_power_bounds(&self) -> Vec<Option<u32>> {
        if self.is_unit() {
            return vec![Some(0); self.nvars];
        }
        let mut bounds = vec![None; self.nvars];
        for g in &self.gens {
            if let Some(i) = g.pure_variable() {
                let e = g.0[i];
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        bounds
    }

    pub fn is_artinian(&self) -> bool {
        self.pure_power_bounds().iter().all(Option::is_some)
    }

    fn artinian_bounds(&self) -> Result<Vec<u32>> {
        self.pure_power_bounds()
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or(Error::NotArtinian { variable: i + 1 }))
            .collect()
    }

    fn checked_box(&self, max_box: u128) -> Result<Vec<u32>> {
        let bounds = self.artinian_bounds()?;
        let mut volume: u128 = 1;
        for &b in &bounds {
            volume = volume.saturating_mul(b as u128);
        }
        if volume > max_box {
            return Err(Error::BoxTooLarge {
                volume,
                limit: max_box,
            });
        }
        Ok(bounds)
    }

    /// Number of standard monomials, by scanning the staircase box with
    /// pruning. Uses [`DEFAULT_MAX_BOX`] as the box-volume guard.
    pub fn std_count_enum(&self) -> Result<BigUint> {
        self.std_count_enum_within(DEFAULT_MAX_BOX)
    }

    pub fn std_count_enum_within(&self, max_box: u128) -> Result<BigUint> {
        let bounds = self.checked_box(max_box)?;
        if self.is_unit() {
            return Ok(BigUint::zero());
        }
        if self.nvars == 0 {
            return Ok(BigUint::one());
        }
        let total: u64 = (0..bounds[0])
            .into_par_iter()
            .map(|e| {
                let mut a = vec![0u32; self.nvars];
                a[0] = e;
                let mut count = 0u64;
                if !self.divides_any(&a) {
                    self.walk(&bounds, 1, &mut a, &mut |_| count += 1);
                }
                count
            })
            .sum();
        Ok(BigUint::from(total))
    }

    /// Standard monomials in degree-then-descending-lex order.
    pub fn std_enumerate(&self) -> Result<Vec<Monomial>> {
        self.std_enumerate_within(DEFAULT_MAX_BOX)
    }

    pub fn std_enumerate_within(&self, max_box: u128) -> Result<Vec<Monomial>> {
        let bounds = self.checked_box(max_box)?;
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut a = vec![0u32; self.nvars];
        if self.nvars == 0 {
            out.push(Monomial(a));
        } else {
            self.walk(&bounds, 0, &mut a, &mut |m| out.push(Monomial(m.to_vec())));
        }
        out.sort_by(Monomial::grlex_cmp);
        Ok(out)
    }

    fn divides_any(&self, a: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.0.iter().zip(a).all(|(x, y)| x <= y))
    }

    /// Visits every standard monomial whose exponents before `var` are fixed
    /// in `a` (coordinates from `var` on must be zero on entry). Relies on
    /// `a` being outside the ideal on entry.
    fn walk(&self, bounds: &[u32], var: usize, a: &mut [u32], visit: &mut impl FnMut(&[u32])) {
        if var == a.len() {
            visit(a);
            return;
        }
        for e in 0..bounds[var] {
            a[var] = e;
            // raising an exponent only moves deeper into the ideal
            if e > 0 && self.divides_any(a) {
                break;
            }
            self.walk(bounds, var + 1, a, visit);
        }
        a[var] = 0;
    }

    /// Number of standard monomials by recursive colon/sum splitting.
    pub fn std_count_recursive(&self) -> Result<BigUint> {
        self.artinian_bounds()?;
        let mut memo = HashMap::new();
        Ok(count_split(self.clone(), &mut memo))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// Pivot for the recursive counter: the variable whose pure-power bound sits
/// furthest above its largest exponent among mixed generators, split at that
/// largest mixed exponent. `None` when no generator is mixed.
fn pivot(ideal: &MonomialIdeal, bounds: &[u32]) -> Option<(usize, u32)> {
    let mut max_mixed = vec![0u32; ideal.nvars];
    for g in ideal.gens.iter().filter(|g| g.support_len() >= 2) {
        for (i, &e) in g.0.iter().enumerate() {
            max_mixed[i] = max_mixed[i].max(e);
        }
    }
    (0..ideal.nvars)
        .filter(|&i| max_mixed[i] > 0)
        .max_by(|&i, &j| {
            let gi = bounds[i] - max_mixed[i];
            let gj = bounds[j] - max_mixed[j];
            // ties go to the leftmost variable
            gi.cmp(&gj).then(j.cmp(&i))
        })
        .map(|i| (i, max_mixed[i]))
}

fn count_split(ideal: MonomialIdeal, memo: &mut HashMap<MonomialIdeal, BigUint>) -> BigUint {
    if ideal.is_unit() {
        return BigUint::zero();
    }
    let bounds: Vec<u32> = ideal
        .pure_power_bounds()
        .into_iter()
        .map(|b| b.expect("Artinian is preserved by colon and sum"))
        .collect();

    // a variable that only occurs in its pure power splits off as a factor
    let mut in_mixed = vec![false; ideal.nvars];
    for g in ideal.gens.iter().filter(|g| g.support_len() >= 2) {
        for (i, &e) in g.0.iter().enumerate() {
            in_mixed[i] |= e > 0;
        }
    }
    let mut factor = BigUint::one();
    let mut gens = Vec::with_capacity(ideal.gens.len());
    let mut reduced = false;
    for g in &ideal.gens {
        match g.pure_variable() {
            Some(i) if !in_mixed[i] && g.0[i] > 1 => {
                factor *= g.0[i];
                gens.push(Monomial::pure_power(ideal.nvars, i, 1));
                reduced = true;
            }
            _ => gens.push(g.clone()),
        }
    }
    let ideal = if reduced {
        MonomialIdeal::from_checked(ideal.nvars, gens)
    } else {
        ideal
    };

    let Some((var, r)) = pivot(&ideal, &bounds) else {
        // only pure powers left; after the reduction above they are all x_i
        return factor;
    };
    if let Some(hit) = memo.get(&ideal) {
        return factor * hit;
    }
    let colon = ideal.colon_unchecked(var, r);
    let sum = ideal.add_unchecked(var, r);
    let count = count_split(colon, memo) + count_split(sum, memo);
    if memo.len() < MEMO_CAPACITY {
        memo.insert(ideal, count.clone());
    }
    factor * count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str, nvars: usize) -> MonomialIdeal {
        MonomialIdeal::parse(&text.replace(',', "\n"), Some(nvars)).unwrap()
    }

    fn mono(text: &str, nvars: usize) -> Monomial {
        parse_monomial(text, nvars).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal("x1^2, x1^2*x3^2", 3), ideal("x1^2", 3));
        assert_eq!(ideal("x1, x2^3, x2", 2), ideal("x1, x2", 2));
        assert!(ideal("1, x1, x2^5", 2).is_unit());
        assert!(MonomialIdeal::minimalize(2, [Monomial::new(vec![1])]).is_err());
    }

    #[test]
    fn membership() {
        let i = ideal("x1*x2", 2);
        assert!(i.contains(&mono("x1^2*x2", 2)).unwrap());
        assert!(!i.contains(&mono("x1^2", 2)).unwrap());
        let small = ideal("x1^2, x2^2, x1*x2", 2);
        assert!(!small.contains(&mono("x1", 2)).unwrap());
        assert!(small.contains(&Monomial::new(vec![1])).is_err());
    }

    #[test]
    fn colon_examples() {
        let i = ideal("x1^3, x2^3, x1*x2", 2);
        assert_eq!(i.colon_pure_power(0, 2).unwrap(), ideal("x1, x2", 2));
        let j = ideal("x1^2, x2^4", 3);
        assert_eq!(j.colon_pure_power(2, 3).unwrap(), j);
        assert_eq!(i.colon_pure_power(0, 0).unwrap(), i);
        assert!(i.colon_pure_power(2, 1).is_err());
    }

    #[test]
    fn add_examples() {
        assert_eq!(ideal("x1^2", 1).add_pure_power(0, 1).unwrap(), ideal("x1", 1));
        assert!(ideal("x1^2, x2", 2).add_pure_power(1, 0).unwrap().is_unit());
    }

    #[test]
    fn artinian_detection() {
        assert!(ideal("x1^2, x2^2, x1*x2", 2).is_artinian());
        assert!(!ideal("x1*x2", 2).is_artinian());
        assert_eq!(
            ideal("x1^2, x1*x2", 2).std_count_enum(),
            Err(Error::NotArtinian { variable: 2 })
        );
        assert_eq!(
            ideal("x1*x2", 2).std_count_recursive(),
            Err(Error::NotArtinian { variable: 1 })
        );
    }

    #[test]
    fn enum_counts() {
        assert_eq!(ideal("x1^2, x2^2, x1*x2", 2).std_count_enum().unwrap(), 3u32.into());
        assert_eq!(
            ideal("x3^3, x4^3, x5^2, x3^2*x4^2, x3^2*x5, x4^2*x5", 5)
                .colon_pure_power(0, 0)
                .unwrap()
                .add_pure_power(0, 1)
                .unwrap()
                .add_pure_power(1, 1)
                .unwrap()
                .std_count_enum()
                .unwrap(),
            12u32.into()
        );
        assert_eq!(ideal("x1, x2, x3", 3).std_count_enum().unwrap(), 1u32.into());
        assert_eq!(MonomialIdeal::unit(2).std_count_enum().unwrap(), 0u32.into());
    }

    #[test]
    fn recursive_counts() {
        assert_eq!(ideal("x1^3, x2^3, x1*x2", 2).std_count_recursive().unwrap(), 5u32.into());
        // a1 = 3, a2 = 2, b = 1
        assert_eq!(
            ideal("x1^3, x2^2, x1^2*x2", 2).std_count_recursive().unwrap(),
            5u32.into()
        );
        assert_eq!(MonomialIdeal::unit(3).std_count_recursive().unwrap(), 0u32.into());
        assert_eq!(
            MonomialIdeal::pure_powers(&[3, 4, 5]).std_count_recursive().unwrap(),
            60u32.into()
        );
    }

    #[test]
    fn zero_variables() {
        let i = MonomialIdeal::minimalize(0, []).unwrap();
        assert!(i.is_artinian());
        assert_eq!(i.std_count_enum().unwrap(), 1u32.into());
        assert_eq!(i.std_count_recursive().unwrap(), 1u32.into());
        assert_eq!(i.std_enumerate().unwrap(), vec![Monomial::one(0)]);
    }

    #[test]
    fn enumerate_examples() {
        let got = ideal("x1^2, x2^2, x1*x2", 2).std_enumerate().unwrap();
        assert_eq!(got, vec![mono("1", 2), mono("x1", 2), mono("x2", 2)]);
        assert_eq!(ideal("x1, x2", 2).std_enumerate().unwrap(), vec![mono("1", 2)]);
    }

    #[test]
    fn box_guard() {
        let big = MonomialIdeal::pure_powers(&[1000, 1000, 1000]);
        assert!(matches!(big.std_count_enum(), Err(Error::BoxTooLarge { .. })));
        assert_eq!(big.std_count_recursive().unwrap(), 1_000_000_000u64.into());
        assert_eq!(big.std_count_enum_within(u128::MAX).unwrap(), 1_000_000_000u64.into());
    }

    #[test]
    fn parse_and_print() {
        let i: MonomialIdeal = "x1^2*x2\n# comment\n\nx3".parse().unwrap();
        assert_eq!(i.nvars(), 3);
        assert_eq!(i.to_string(), "<x3, x1^2*x2>");
        let err = MonomialIdeal::parse("x1\nx2^q", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(MonomialIdeal::parse("y1", Some(2)).is_err());
        assert!(MonomialIdeal::parse("x3", Some(2)).is_err());
    }
}
