//! Dense univariate polynomials with integer or rational coefficients.
//!
//! Coefficients are stored lowest degree first. The zero polynomial is the
//! empty vector; every other value has a nonzero leading coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

pub type IntPoly = Vec<BigInt>;
pub type RatPoly = Vec<Rational>;

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division by a monic divisor. Returns `None` if the remainder is nonzero.
fn int_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<IntPoly> {
    let dl = den.len();
    assert!(dl > 0 && den[dl - 1].is_one(), "divisor must be monic");
    if num.len() < dl {
        return if num.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dl - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    rem.is_empty().then(|| {
        trim(&mut quot);
        quot
    })
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let upper: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&q| q * q != n).collect();
    out.extend(upper);
    out
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by
/// `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut den: IntPoly = vec![BigInt::one()];
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        den = int_mul(&den, &cyclotomic_polynomial(d));
    }
    int_div_exact(&num, &den).expect("x^n - 1 is divisible by the product of lower cyclotomic polynomials")
}

pub(crate) fn rat_sub(a: &[Rational], b: &[Rational]) -> RatPoly {
    let len = a.len().max(b.len());
    let mut out: RatPoly = (0..len)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn rat_mul(a: &[Rational], b: &[Rational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder over Q. `den` must be nonzero.
pub(crate) fn rat_divrem(num: &[Rational], den: &[Rational]) -> (RatPoly, RatPoly) {
    let dl = den.len();
    assert!(dl > 0, "polynomial division by zero");
    if num.len() < dl {
        return (Vec::new(), num.to_vec());
    }
    let lead_inv = den[dl - 1].recip();
    let mut rem = num.to_vec();
    let mut quot = vec![Rational::zero(); num.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dl - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo an irreducible `modulus` via the extended Euclidean
/// algorithm. Returns `None` when `a` is zero modulo `modulus`.
pub(crate) fn rat_inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<RatPoly> {
    let (_, a) = rat_divrem(a, modulus);
    if a.is_empty() {
        return None;
    }
    // Invariant: s_i * a ≡ r_i (mod modulus).
    let (mut r0, mut r1) = (modulus.to_vec(), a);
    let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![Rational::one()]);
    while r1.len() > 1 {
        let (q, r) = rat_divrem(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        if r1.is_empty() {
            // gcd has positive degree; modulus was not irreducible.
            return None;
        }
    }
    let c = r1[0].recip();
    let mut inv: RatPoly = s1.iter().map(|x| x * &c).collect();
    trim(&mut inv);
    Some(rat_divrem(&inv, modulus).1)
}

pub(crate) fn to_rational(p: &[BigInt]) -> RatPoly {
    p.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

/// Human-readable rendering in the variable `var`, lowest degree first.
pub(crate) fn render(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses the output of [`render`]. Powers may repeat and appear in any order.
pub(crate) fn parse(text: &str, var: &str) -> Result<RatPoly, String> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in cleaned.char_indices() {
        // a sign starts a new term unless it is the very first character
        if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(format!("dangling sign in {text:?}"));
    }
    terms.push((neg, cur));

    let mut out: RatPoly = Vec::new();
    for (neg, term) in terms {
        let (coeff, power) = parse_term(&term, var).ok_or_else(|| format!("bad term {term:?}"))?;
        if out.len() <= power {
            out.resize(power + 1, Rational::zero());
        }
        if neg {
            out[power] -= coeff;
        } else {
            out[power] += coeff;
        }
    }
    trim(&mut out);
    Ok(out)
}

fn parse_term(term: &str, var: &str) -> Option<(Rational, usize)> {
    let (coeff_part, mono_part) = match term.find(var) {
        None => (term, None),
        Some(pos) => {
            let coeff = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
            (coeff, Some(&term[pos + var.len()..]))
        }
    };
    let coeff = if coeff_part.is_empty() {
        mono_part?;
        Rational::one()
    } else {
        parse_rational(coeff_part)?
    };
    let power = match mono_part {
        None => 0,
        Some("") => 1,
        Some(rest) => rest.strip_prefix('^')?.parse().ok()?,
    };
    Some((coeff, power))
}

fn parse_rational(text: &str) -> Option<Rational> {
    match text.split_once('/') {
        None => Some(Rational::from_integer(text.parse::<BigInt>().ok()?)),
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() || d.is_negative() {
                return None;
            }
            let g = n.gcd(&d);
            Some(Rational::new_raw(n / &g, d / g))
        }
    }
}
