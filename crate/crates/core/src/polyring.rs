//! Univariate polynomials over the rationals and minimal polynomials of
//! matrices.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmat::rational::coeff_str;
use crate::exactmat::{Matrix, Rational};

/// Dense polynomial, coefficients in ascending degree. The highest stored
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::exactmat::int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `l^k`
    pub fn lambda_pow(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Polynomial { coeffs }
    }

    /// `(l - root)^e`
    pub fn root_pow(root: Rational, e: usize) -> Self {
        let linear = Self::from_coeffs(vec![-root, Rational::one()]);
        (0..e).fold(Self::one(), |acc, _| &acc * &linear)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Scaled to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                Polynomial {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial("division"));
        };
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// True when `self` divides `other` exactly. Zero divides only zero.
    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        let n = a.require_square("eval_matrix")?;
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * a;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        Ok(acc)
    }

    /// Expanded form, highest degree first, e.g. `l^2 + 4l + 4`.
    pub fn expanded(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if d == 0 {
                out.push_str(&coeff_str(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&coeff_str(&mag));
                }
                out.push('l');
                if d > 1 {
                    out.push_str(&format!("^{d}"));
                }
            }
        }
        out
    }

    /// Product of `l^k`, the rational linear factors with multiplicity and
    /// the remaining factor without rational roots, e.g. `l^3 * (l + 2)^2`.
    pub fn factored(&self) -> String {
        let Ok((k, f)) = split_lambda_power(self) else {
            return "0".into();
        };
        let mut parts = Vec::new();
        let lead = f.leading().expect("nonzero").clone();
        if !lead.is_one() {
            parts.push(coeff_str(&lead));
        }
        match k {
            0 => {}
            1 => parts.push("l".to_string()),
            _ => parts.push(format!("l^{k}")),
        }
        let mut rest = f.monic();
        for (root, e) in rest.clone().rational_roots() {
            let linear = Polynomial::root_pow(root, 1);
            for _ in 0..e {
                rest = rest.div_rem(&linear).expect("nonzero divisor").0;
            }
            let text = linear.expanded();
            parts.push(if e == 1 { text } else { format!("({text})^{e}") });
        }
        if rest != Polynomial::one() {
            parts.push(rest.expanded());
        }
        match parts.len() {
            0 => "1".into(),
            1 => parts.remove(0),
            _ => parts
                .iter()
                .map(|p| if p.contains(' ') && !p.starts_with('(') { format!("({p})") } else { p.clone() })
                .collect::<Vec<_>>()
                .join(" * "),
        }
    }

    /// Nonzero rational roots with multiplicities, ascending, by the rational
    /// root test. Polynomials whose scaled end coefficients exceed `10^12` are
    /// left unsplit.
    fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 || self.coeffs[0].is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = |c: &Rational| (c.numer() * &den / c.denom()).abs();
        let (Some(a0), Some(an)) = (scaled(&self.coeffs[0]).to_u64(), scaled(&self.coeffs[deg]).to_u64()) else {
            return Vec::new();
        };
        if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
            return Vec::new();
        }
        let mut candidates = Vec::new();
        for p in divisors(a0) {
            for q in divisors(an) {
                let r = Rational::new(BigInt::from(p), BigInt::from(q));
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut rest = self.clone();
        let mut out = Vec::new();
        for r in candidates {
            let linear = Polynomial::root_pow(r.clone(), 1);
            let mut e = 0;
            while let Ok((q, rem)) = rest.div_rem(&linear) {
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((r, e));
            }
        }
        out
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.factored())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

/// Monic gcd and monic lcm. The lcm with a zero operand is zero.
pub fn poly_gcd_lcm(p: &Polynomial, q: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial("gcd"));
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    let gcd = a.monic();
    let lcm = if p.is_zero() || q.is_zero() {
        Polynomial::zero()
    } else {
        (&p.monic() * &q.monic()).div_rem(&gcd)?.0
    };
    Ok((gcd, lcm))
}

/// Writes `p = l^k * f` with `f(0) != 0`.
pub fn split_lambda_power(p: &Polynomial) -> Result<(usize, Polynomial)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("split_lambda_power"));
    }
    let k = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    Ok((k, Polynomial::from_coeffs(p.coeffs[k..].to_vec())))
}

/// Minimal polynomial by searching for the first linear dependence among
/// the vectorised powers `I, A, A^2, ...`.
pub fn min_poly(a: &Matrix) -> Result<Polynomial> {
    let n = a.require_square("min_poly")?;
    // Echelon rows: (vector, pivot position, combination of powers).
    let mut basis: Vec<(Vec<Rational>, usize, Vec<Rational>)> = Vec::new();
    let mut power = Matrix::identity(n);
    for j in 0..=n {
        let mut v = power.vectorize().to_vec();
        let mut comb = vec![Rational::zero(); j + 1];
        comb[j] = Rational::one();
        for (b, piv, bcomb) in &basis {
            if v[*piv].is_zero() {
                continue;
            }
            let f = &v[*piv] / &b[*piv];
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in comb.iter_mut().zip(bcomb) {
                *x -= &f * y;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return Ok(Polynomial::from_coeffs(comb)),
            Some(piv) => basis.push((v, piv, comb)),
        }
        power = &power * a;
    }
    Err(Error::Internal("no dependence among n+1 powers".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;

    fn lam(k: usize) -> Polynomial {
        Polynomial::lambda_pow(k)
    }

    fn root(r: i64, e: usize) -> Polynomial {
        Polynomial::root_pow(int(r), e)
    }

    #[test]
    fn gcd_lcm_of_powers() {
        let (g, l) = poly_gcd_lcm(&lam(2), &lam(3)).unwrap();
        assert_eq!(g, lam(2));
        assert_eq!(l, lam(3));
    }

    #[test]
    fn lcm_with_shift_factor() {
        let p = &lam(2) * &root(-2, 2);
        let (g, l) = poly_gcd_lcm(&p, &root(1, 1)).unwrap();
        assert_eq!(g, Polynomial::one());
        assert_eq!(l, &(&root(1, 1) * &lam(2)) * &root(-2, 2));
    }

    #[test]
    fn gcd_of_zero_pair_is_error() {
        assert!(poly_gcd_lcm(&Polynomial::zero(), &Polynomial::zero()).is_err());
        let (g, l) = poly_gcd_lcm(&Polynomial::from_ints(&[0, 2]), &Polynomial::zero()).unwrap();
        assert_eq!(g, lam(1));
        assert!(l.is_zero());
    }

    #[test]
    fn division_identity() {
        let p = Polynomial::from_ints(&[3, -1, 0, 2, 5]);
        let d = Polynomial::from_ints(&[1, 0, 2]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, p);
        assert!(r.degree().unwrap_or(0) < 2);
        assert!(p.div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_lambda_power(&lam(3)).unwrap(), (3, Polynomial::one()));
        let p = &root(-2, 2) * &lam(3);
        assert_eq!(split_lambda_power(&p).unwrap(), (3, root(-2, 2)));
        let q = &(&root(7, 1) * &lam(1)) * &root(1, 2);
        assert_eq!(split_lambda_power(&q).unwrap(), (1, &root(7, 1) * &root(1, 2)));
        assert!(split_lambda_power(&Polynomial::zero()).is_err());
    }

    #[test]
    fn min_poly_small_cases() {
        assert_eq!(min_poly(&Matrix::identity(3)).unwrap(), root(1, 1));
        assert_eq!(min_poly(&Matrix::zeros(2, 2)).unwrap(), lam(1));
        assert_eq!(min_poly(&Matrix::zeros(0, 0)).unwrap(), Polynomial::one());
        let j3 = Matrix::from_ints(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        assert_eq!(min_poly(&j3).unwrap(), lam(3));
        assert!(min_poly(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn min_poly_annihilates() {
        let a = Matrix::from_ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 3]]);
        let p = min_poly(&a).unwrap();
        assert_eq!(p, &root(2, 2) * &root(3, 1));
        assert!(p.eval_matrix(&a).unwrap().is_zero());
    }

    #[test]
    fn display_forms() {
        let p = &lam(3) * &root(-2, 2);
        assert_eq!(p.to_string(), "l^3 * (l + 2)^2");
        let irreducible = &lam(1) * &Polynomial::from_ints(&[6, 3, 1]);
        assert_eq!(irreducible.to_string(), "l * (l^2 + 3l + 6)");
        let mixed = &(&root(7, 1) * &root(1, 2)) * &Polynomial::from_ints(&[2, 0, 1]);
        assert_eq!(mixed.to_string(), "(l - 1)^2 * (l - 7) * (l^2 + 2)");
        assert_eq!(lam(3).to_string(), "l^3");
        assert_eq!(root(1, 1).to_string(), "l - 1");
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let q = Polynomial::from_coeffs(vec![int(0), crate::exactmat::frac(-1, 2), int(2)]);
        assert_eq!(q.to_string(), "2 * l * (l - (1/4))");
    }
}
