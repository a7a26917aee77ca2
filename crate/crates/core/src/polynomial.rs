//! Sparse multivariate polynomials with exact rational coefficients.

use std::fmt;

use itertools::{EitherOrBoth, Itertools};

use crate::error::{check_dim, Error, Result};
use crate::monomial::Monomial;
use crate::order::LexOrder;
use crate::rational::Rational;

/// A polynomial over the rationals in `n` variables, stored as terms sorted
/// by monomial (standard lex, ascending). No zero coefficient is ever
/// stored; no terms is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: Vec::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.dim());
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// `x_var - c` (0-based `var`).
    pub fn linear(n: usize, var: usize, c: Rational) -> Self {
        let mut p = Self::monomial(Monomial::var(n, var));
        p.add_term(Monomial::one(n), -c);
        p
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let terms: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        for (m, _) in &terms {
            check_dim(n, m.dim())?;
        }
        Ok(Self::collect_terms(n, terms))
    }

    pub fn dim(&self) -> usize {
        self.n
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

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Terms in standard lex order (ascending).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.dim(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(t, _)| t.cmp(&m)) {
            Ok(i) => {
                let sum = &self.terms[i].1 + &c;
                if sum.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = sum;
                }
            }
            Err(i) => self.terms.insert(i, (m, c)),
        }
    }

    /// Sorts, sums like terms and drops zeros.
    fn collect_terms(n: usize, mut terms: Vec<(Monomial, Rational)>) -> Polynomial {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((last, acc)) if *last == m => *acc += &c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial { n, terms: merged }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, other.n)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, other.n)?;
        Ok(self.merge(other, |c| -c))
    }

    /// `self + f(other)` coefficientwise, by a linear merge of the sorted terms.
    fn merge(&self, other: &Polynomial, f: impl Fn(&Rational) -> Rational) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        terms.extend(
            self.terms
                .iter()
                .merge_join_by(&other.terms, |a, b| a.0.cmp(&b.0))
                .filter_map(|pair| match pair {
                    EitherOrBoth::Left((m, c)) => Some((m.clone(), c.clone())),
                    EitherOrBoth::Right((m, c)) => Some((m.clone(), f(c))),
                    EitherOrBoth::Both((m, a), (_, b)) => {
                        let s = a + &f(b);
                        (!s.is_zero()).then(|| (m.clone(), s))
                    }
                }),
        );
        Polynomial { n: self.n, terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, other.n)?;
        let mut products: Vec<(Monomial, Rational)> = Vec::with_capacity(self.len() * other.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                products.push((a.mul_unchecked(b), x * y));
            }
        }
        Ok(Self::collect_terms(self.n, products))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Result<Polynomial> {
        check_dim(self.n, m.dim())?;
        if c.is_zero() {
            return Ok(Polynomial::zero(self.n));
        }
        Ok(Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(t, x)| (t.mul_unchecked(m), x * c))
                .collect(),
        })
    }

    /// Exact value at an integer point.
    pub fn evaluate(&self, point: &[u32]) -> Result<Rational> {
        check_dim(self.n, point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| c * &monomial_value(m.exponents(), point))
            .sum())
    }

    /// The largest support monomial under `ord`.
    pub fn leading_monomial(&self, ord: &LexOrder) -> Result<Monomial> {
        check_dim(self.n, ord.dim())?;
        self.support()
            .max_by(|a, b| ord.compare_unchecked(a, b))
            .cloned()
            .ok_or_else(|| Error::Domain("the zero polynomial has no leading monomial".into()))
    }

    /// Returns the dominating term when `self = x^w + sum a_i x^{v_i}` with
    /// every `x^{v_i}` a proper divisor of `x^w`.
    pub fn is_degree_dominated(&self) -> Result<Option<Monomial>> {
        let (top, c) = self
            .terms
            .iter()
            .max_by_key(|(m, _)| m.degree())
            .ok_or_else(|| Error::Domain("the zero polynomial is not degree dominated".into()))?;
        if !c.is_one() {
            return Ok(None);
        }
        let dominated = self.support().all(|m| m == top || m.divides_unchecked(top));
        Ok(dominated.then(|| top.clone()))
    }

    /// Renders terms in descending `ord` order, e.g. `x1^2*x2 - 3/2*x1 + 5`.
    pub fn render(&self, ord: &LexOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.compare_unchecked(&b.0, &a.0));
        let mut out = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            if m.is_one() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{a}*{m}"));
            }
        }
        out
    }

    /// Parses the rendering syntax produced by [`Polynomial::render`].
    /// Factors within a term may appear in any order and repeat.
    pub fn parse(n: usize, text: &str) -> Result<Polynomial> {
        Parser {
            n,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
        .parse()
    }
}

pub(crate) fn monomial_value(exps: &[u32], point: &[u32]) -> Rational {
    let mut acc: i128 = 1;
    for (&e, &c) in exps.iter().zip(point) {
        if e == 0 {
            continue;
        }
        match (c as i128).checked_pow(e).and_then(|v| acc.checked_mul(v)) {
            Some(v) if v <= i64::MAX as i128 => acc = v,
            _ => return monomial_value_big(exps, point),
        }
    }
    Rational::from_integer(acc as i64)
}

fn monomial_value_big(exps: &[u32], point: &[u32]) -> Rational {
    exps.iter()
        .zip(point)
        .fold(Rational::one(), |acc, (&e, &c)| {
            &acc * &Rational::from(c).pow(e)
        })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&LexOrder::standard(self.n)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser {
    n: usize,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        Error::Domain(format!(
            "polynomial syntax error at offset {}: {what}",
            self.pos
        ))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn parse(mut self) -> Result<Polynomial> {
        if self.chars.is_empty() {
            return Err(self.err("empty input"));
        }
        let mut p = Polynomial::zero(self.n);
        let mut first = true;
        while self.pos < self.chars.len() {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let (m, c) = self.term()?;
            p.add_term(m, if sign < 0 { -c } else { c });
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.n];
        let mut coef = Rational::one();
        loop {
            match self.peek() {
                Some('x') => {
                    self.pos += 1;
                    let idx: usize = self
                        .digits()
                        .parse()
                        .map_err(|_| self.err("expected variable index"))?;
                    if idx == 0 || idx > self.n {
                        return Err(self.err(&format!("variable x{idx} outside x1..x{}", self.n)));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = self
                            .digits()
                            .parse()
                            .map_err(|_| self.err("expected exponent"))?;
                    }
                    exps[idx - 1] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    let mut lit = self.digits();
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        lit.push('/');
                        lit.push_str(&self.digits());
                    }
                    let r: Rational = lit.parse().map_err(|_| self.err("bad coefficient"))?;
                    coef = &coef * &r;
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coef))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(n, s).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            poly(2, "x1^2 - x1").evaluate(&[1, 0]).unwrap(),
            Rational::zero()
        );
        assert_eq!(
            poly(2, "x1*x2 - x1").evaluate(&[1, 0]).unwrap(),
            Rational::from_integer(-1)
        );
        assert_eq!(
            poly(2, "x1*x2").evaluate(&[2, 2]).unwrap(),
            Rational::from_integer(4)
        );
        assert!(poly(2, "x1").evaluate(&[1]).is_err());
    }

    #[test]
    fn evaluate_large_values_exactly() {
        let p = poly(1, "x1^30");
        assert_eq!(
            p.evaluate(&[15]).unwrap().to_string(),
            "191751059232884086668491363525390625"
        );
    }

    #[test]
    fn leading_monomial_examples() {
        let p = poly(2, "x1 + x2^2");
        let std = LexOrder::from_one_based(&[1, 2]).unwrap();
        let rev = LexOrder::from_one_based(&[2, 1]).unwrap();
        assert_eq!(p.leading_monomial(&std).unwrap().to_string(), "x1");
        assert_eq!(p.leading_monomial(&rev).unwrap().to_string(), "x2^2");
        assert!(poly(2, "5").leading_monomial(&std).unwrap().is_one());
        assert!(Polynomial::zero(2).leading_monomial(&std).is_err());
    }

    #[test]
    fn degree_domination_examples() {
        assert_eq!(
            poly(1, "x1^2 - x1")
                .is_degree_dominated()
                .unwrap()
                .unwrap()
                .to_string(),
            "x1^2"
        );
        assert_eq!(poly(2, "x1 + x2").is_degree_dominated().unwrap(), None);
        assert_eq!(poly(1, "2*x1^2 - x1").is_degree_dominated().unwrap(), None);
        assert!(Polynomial::zero(1).is_degree_dominated().is_err());
        assert_eq!(poly(2, "7").is_degree_dominated().unwrap(), None);
        assert!(poly(2, "1")
            .is_degree_dominated()
            .unwrap()
            .unwrap()
            .is_one());
    }

    #[test]
    fn render_and_parse() {
        let p = poly(3, "5 - 3/2*x1 + x1^2*x2 + x3*x3");
        let s = p.render(&LexOrder::standard(3));
        assert_eq!(s, "x1^2*x2 - 3/2*x1 + x3^2 + 5");
        assert_eq!(poly(3, &s), p);
        assert_eq!(poly(2, "-x1 + x1").to_string(), "0");
        assert_eq!(poly(2, "-x2").to_string(), "-x2");
        assert!(Polynomial::parse(2, "x3").is_err());
        assert!(Polynomial::parse(2, "x1 x2").is_err());
        assert!(Polynomial::parse(2, "").is_err());
        assert!(Polynomial::parse(2, "x1 +").is_err());
    }

    #[test]
    fn arithmetic() {
        let a = poly(2, "x1 - 1");
        let b = poly(2, "x2 + 1");
        assert_eq!(a.mul(&b).unwrap(), poly(2, "x1*x2 + x1 - x2 - 1"));
        assert_eq!(a.add(&b).unwrap(), poly(2, "x1 + x2"));
        assert_eq!(a.sub(&a).unwrap(), Polynomial::zero(2));
        assert_eq!(a.scale(&Rational::new(1, 2)), poly(2, "1/2*x1 - 1/2"));
    }
}
