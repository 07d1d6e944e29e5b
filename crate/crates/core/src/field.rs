//! Exact arithmetic in the real cyclotomic field `Q(2cos(pi/N))`.
//!
//! Elements are stored as rational polynomials in `theta = 2cos(pi/N)` reduced
//! modulo the minimal polynomial of `theta`. Signs are decided with certified
//! dyadic interval bounds on the powers of `theta`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CoxeterError;

/// Integer polynomial, lowest degree first.
pub type IntPoly = Vec<BigInt>;

/// Minimal polynomial of `2cos(pi/N)` over the rationals.
///
/// `N = 1` is treated as `N = 2`.
pub fn minimal_polynomial(n: u32) -> IntPoly {
    let n = n.max(2);
    if let Some(candidate) = numeric_candidate(n) {
        if verify_candidate(n, &candidate) {
            return candidate;
        }
    }
    minimal_polynomial_from_cyclotomic(n)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Euler phi of `2n`, halved: the degree of the minimal polynomial.
pub fn field_degree(n: u32) -> usize {
    let n = n.max(2) as u64;
    (1..2 * n).filter(|&k| gcd_u64(k, 2 * n) == 1).count() / 2
}

fn numeric_candidate(n: u32) -> Option<IntPoly> {
    if n > 2000 {
        return None;
    }
    let two_n = 2 * n as u64;
    let mut poly = vec![1.0f64];
    for k in (1..n as u64).filter(|&k| gcd_u64(k, two_n) == 1) {
        let r = 2.0 * (k as f64 * std::f64::consts::PI / n as f64).cos();
        let mut next = vec![0.0; poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        poly = next;
    }
    let mut out = Vec::with_capacity(poly.len());
    for c in poly {
        let r = c.round();
        if (c - r).abs() > 0.25 || !r.is_finite() || r.abs() > 1e15 {
            return None;
        }
        out.push(BigInt::from(r as i64));
    }
    Some(out)
}

/// Integer coefficients of `C_k`, with `C_0 = 2`, `C_1 = x`, `C_{j+1} = x C_j - C_{j-1}`.
pub fn dickson_poly(k: u32) -> IntPoly {
    let mut prev: IntPoly = vec![BigInt::from(2)];
    if k == 0 {
        return prev;
    }
    let mut cur: IntPoly = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..k {
        let mut next: IntPoly = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Remainder of `a` divided by the monic polynomial `m`.
fn int_rem_monic(a: &[BigInt], m: &[BigInt]) -> IntPoly {
    let d = m.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= d {
        return r;
    }
    for k in (d..r.len()).rev() {
        let c = r[k].clone();
        if c.is_zero() {
            continue;
        }
        for (i, mi) in m.iter().enumerate() {
            r[k - d + i] -= &c * mi;
        }
    }
    r.truncate(d);
    r
}

fn int_eval_sign_at_dyadic(p: &[BigInt], num: &BigInt, bits: u32) -> Sign {
    // sign of sum p_i (num / 2^bits)^i, scaled by 2^(bits * deg)
    let deg = p.len() - 1;
    let mut total = BigInt::zero();
    let mut pow = BigInt::one();
    for (i, c) in p.iter().enumerate() {
        total += (c * &pow) << (bits as usize * (deg - i));
        pow *= num;
    }
    total.sign()
}

fn verify_candidate(n: u32, cand: &IntPoly) -> bool {
    if cand.last().map(|c| !c.is_one()).unwrap_or(true) {
        return false;
    }
    if cand.len() - 1 != field_degree(n) {
        return false;
    }
    // must divide C_N(x) + 2, whose roots are 2cos((2j+1)pi/N)
    let mut target = dickson_poly(n);
    target[0] += 2;
    if int_rem_monic(&target, cand).iter().any(|c| !c.is_zero()) {
        return false;
    }
    // and must vanish at theta: sign change across a small dyadic window
    let theta = 2.0 * (std::f64::consts::PI / n as f64).cos();
    let bits = 40u32;
    let centre = (theta * (1u64 << bits) as f64).round() as i64;
    let lo = BigInt::from(centre - 64);
    let hi = BigInt::from(centre + 64);
    let a = int_eval_sign_at_dyadic(cand, &lo, bits);
    let b = int_eval_sign_at_dyadic(cand, &hi, bits);
    a != Sign::NoSign && b != Sign::NoSign && a != b
}

fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    // b monic
    let db = b.len() - 1;
    if a.len() <= db {
        return vec![BigInt::zero()];
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k].clone();
        q[k - db] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            r[k - db + i] -= &c * bi;
        }
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

/// Cyclotomic polynomial `Phi_m` by exact division.
pub fn cyclotomic(m: u64) -> IntPoly {
    let mut cache: HashMap<u64, IntPoly> = HashMap::new();
    cyclotomic_cached(m, &mut cache)
}

fn cyclotomic_cached(m: u64, cache: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    let mut num: IntPoly = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let pd = cyclotomic_cached(d, cache);
        num = int_poly_div_exact(&num, &pd);
    }
    cache.insert(m, num.clone());
    num
}

/// Exact route: `Phi_{2N}(z) = z^D Psi_N(z + 1/z)`.
pub fn minimal_polynomial_from_cyclotomic(n: u32) -> IntPoly {
    let n = n.max(2);
    let phi = cyclotomic(2 * n as u64);
    let d = (phi.len() - 1) / 2;
    let mut out: IntPoly = vec![BigInt::zero(); d + 1];
    out[0] += &phi[d];
    for j in 1..=d {
        let c = &phi[d + j];
        for (i, cj) in dickson_poly(j as u32).iter().enumerate() {
            out[i] += c * cj;
        }
    }
    out
}

#[derive(Debug, Clone)]
struct ThetaLevel {
    bits: u32,
    lo: BigInt,
    /// `pow_lo[i] / 2^bits <= theta^i <= pow_hi[i] / 2^bits`
    pow_lo: Vec<BigInt>,
    pow_hi: Vec<BigInt>,
}

/// Shared description of one field `Q(theta)`.
#[derive(Debug)]
pub struct Field {
    order: u32,
    modulus: IntPoly,
    theta_f64: f64,
    levels: Mutex<Vec<ThetaLevel>>,
}

static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();

impl Field {
    /// The field for `N`, shared process-wide.
    pub fn get(order: u32) -> Arc<Field> {
        let order = order.max(2);
        let table = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = table.lock().expect("field table poisoned");
        guard
            .entry(order)
            .or_insert_with(|| {
                Arc::new(Field {
                    order,
                    modulus: minimal_polynomial(order),
                    theta_f64: 2.0 * (std::f64::consts::PI / order as f64).cos(),
                    levels: Mutex::new(Vec::new()),
                })
            })
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn theta_f64(&self) -> f64 {
        self.theta_f64
    }

    fn level(&self, bits: u32) -> ThetaLevel {
        let mut levels = self.levels.lock().expect("theta cache poisoned");
        if let Some(l) = levels.iter().find(|l| l.bits == bits) {
            return l.clone();
        }
        let (mut cur_bits, mut lo) = match levels.last() {
            Some(l) if l.bits < bits => (l.bits, l.lo.clone()),
            _ => self.initial_bracket(),
        };
        while cur_bits < bits {
            let step = (bits - cur_bits).min(cur_bits);
            let new_bits = cur_bits + step;
            let mut l = &lo << step as usize;
            let mut h = (&lo + 1u32) << step as usize;
            while &h - &l > BigInt::one() {
                let mid: BigInt = (&l + &h) >> 1usize;
                if self.below_theta(&mid, new_bits) {
                    l = mid;
                } else {
                    h = mid;
                }
            }
            lo = l;
            cur_bits = new_bits;
        }
        let two_pow = BigInt::one() << bits as usize;
        let hi = &lo + 1;
        assert!(lo.sign() == Sign::Plus, "theta bracket must be positive");
        let deg = self.degree();
        let mut pow_lo = vec![two_pow.clone()];
        let mut pow_hi = vec![two_pow.clone()];
        for i in 1..deg {
            let pl: BigInt = &pow_lo[i - 1] * &lo;
            let ph: BigInt = &pow_hi[i - 1] * &hi;
            pow_lo.push(pl.div_floor(&two_pow));
            pow_hi.push(ph.div_ceil(&two_pow));
        }
        let level = ThetaLevel { bits, lo, pow_lo, pow_hi };
        levels.push(level.clone());
        levels.sort_by_key(|l| l.bits);
        level
    }

    /// Theta is the largest root of a monic polynomial, so the modulus is
    /// negative exactly on a left neighbourhood of theta.
    fn below_theta(&self, num: &BigInt, bits: u32) -> bool {
        int_eval_sign_at_dyadic(&self.modulus, num, bits) == Sign::Minus
    }

    /// Dyadic bracket `[lo, lo+1] / 2^32` for theta.
    fn initial_bracket(&self) -> (u32, BigInt) {
        let bits = 32u32;
        let centre = (self.theta_f64 * (1u64 << bits) as f64).floor() as i64;
        let mut l = BigInt::from(centre - 4);
        let mut h = BigInt::from(centre + 5);
        assert!(
            self.below_theta(&l, bits) && !self.below_theta(&h, bits),
            "theta not isolated for N = {}",
            self.order
        );
        while &h - &l > BigInt::one() {
            let mid: BigInt = (&l + &h) >> 1usize;
            if self.below_theta(&mid, bits) {
                l = mid;
            } else {
                h = mid;
            }
        }
        (bits, l)
    }
}

/// An element of `Q(2cos(pi/N))`.
#[derive(Clone)]
pub struct AlgebraicReal {
    field: Arc<Field>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}
impl Eq for AlgebraicReal {}

impl Hash for AlgebraicReal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "θ".to_string(),
                _ => format!("θ^{}", i),
            };
            let body = if i > 0 && c.abs().is_one() {
                mono
            } else if i > 0 {
                format!("{}{}", c.abs(), mono)
            } else {
                c.abs().to_string()
            };
            terms.push((c.is_negative(), body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (neg, body)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-{}", body)?,
                (0, false) => write!(f, "{}", body)?,
                (_, true) => write!(f, " - {}", body)?,
                (_, false) => write!(f, " + {}", body)?,
            }
        }
        Ok(())
    }
}

impl AlgebraicReal {
    pub fn zero(field: &Arc<Field>) -> Self {
        AlgebraicReal { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree()] }
    }

    pub fn one(field: &Arc<Field>) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Arc<Field>, v: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(field: &Arc<Field>, v: BigRational) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = v;
        out
    }

    /// The generator `theta = 2cos(pi/N)`.
    pub fn theta(field: &Arc<Field>) -> Self {
        if field.degree() == 1 {
            // theta is the root of a linear monic polynomial x + c
            let v = -field.modulus[0].clone();
            return Self::from_rational(field, BigRational::from_integer(v));
        }
        let mut out = Self::zero(field);
        out.coeffs[1] = BigRational::one();
        out
    }

    /// Build from an arbitrary coefficient list in powers of theta, reducing as needed.
    pub fn from_poly(field: &Arc<Field>, poly: Vec<BigRational>) -> Self {
        let mut out = AlgebraicReal { field: field.clone(), coeffs: poly };
        out.reduce();
        out
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the value is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        let d = self.field.degree();
        if self.coeffs.len() > d {
            let m = &self.field.modulus;
            for k in (d..self.coeffs.len()).rev() {
                let c = std::mem::take(&mut self.coeffs[k]);
                if c.is_zero() {
                    continue;
                }
                for (i, mi) in m.iter().enumerate().take(d) {
                    if !mi.is_zero() {
                        self.coeffs[k - d + i] -= &c * BigRational::from_integer(mi.clone());
                    }
                }
            }
        }
        self.coeffs.resize(d, BigRational::zero());
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field.order, other.field.order, "mixed fields in arithmetic");
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        AlgebraicReal { field: self.field.clone(), coeffs }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        AlgebraicReal { field: self.field.clone(), coeffs }
    }

    pub fn neg_ref(&self) -> Self {
        AlgebraicReal { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.field);
        }
        AlgebraicReal { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        let d = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out = AlgebraicReal { field: self.field.clone(), coeffs: prod };
        out.reduce();
        out
    }

    /// Multiplicative inverse, by solving the multiplication-matrix system.
    pub fn inv(&self) -> Result<Self, CoxeterError> {
        if self.is_zero() {
            return Err(CoxeterError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(&self.field, self.coeffs[0].recip()));
        }
        let d = self.field.degree();
        // column j holds the coefficients of self * theta^j
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        let mut cur = self.clone();
        let theta = Self::theta(&self.field);
        for _ in 0..d {
            cols.push(cur.coeffs.clone());
            cur = cur.mul_ref(&theta);
        }
        // augmented rows: sum_j cols[j][i] x_j = delta_{i0}
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut r: Vec<BigRational> = (0..d).map(|j| cols[j][i].clone()).collect();
                r.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                r
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !rows[r][c].is_zero()).ok_or(CoxeterError::DivisionByZero)?;
            rows.swap(c, p);
            let piv = rows[c][c].clone();
            for v in rows[c].iter_mut() {
                *v /= &piv;
            }
            for r in 0..d {
                if r != c && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    let pivot_row = rows[c].clone();
                    for (v, p) in rows[r].iter_mut().zip(&pivot_row).skip(c) {
                        *v -= &f * p;
                    }
                }
            }
        }
        let coeffs = rows.into_iter().map(|r| r[d].clone()).collect();
        Ok(AlgebraicReal { field: self.field.clone(), coeffs })
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self, CoxeterError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.field);
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Floating-point approximation.
    pub fn to_f64(&self) -> f64 {
        let t = if self.field.degree() == 1 { 0.0 } else { self.field.theta_f64 };
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Exact sign: -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.is_rational() {
            return if self.coeffs[0].is_positive() { 1 } else { -1 };
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut bits = 64u32;
        loop {
            let lvl = self.field.level(bits);
            let mut lower = BigInt::zero();
            let mut upper = BigInt::zero();
            for (i, a) in ints.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                if a.is_positive() {
                    lower += a * &lvl.pow_lo[i];
                    upper += a * &lvl.pow_hi[i];
                } else {
                    lower += a * &lvl.pow_hi[i];
                    upper += a * &lvl.pow_lo[i];
                }
            }
            if lower.is_positive() {
                return 1;
            }
            if upper.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Three-way comparison through the sign of the difference.
    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        match self.sub_ref(other).signum() {
            -1 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    /// `C_k(theta) = 2cos(k pi / N)`.
    pub fn dickson_at_theta(field: &Arc<Field>, k: u32) -> Self {
        let mut prev = Self::from_integer(field, 2);
        if k == 0 {
            return prev;
        }
        let theta = Self::theta(field);
        let mut cur = theta.clone();
        for _ in 1..k {
            let next = theta.mul_ref(&cur).sub_ref(&prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `2cos(pi/m)` for a finite `m` dividing `N`.
    pub fn two_cos_pi_over(field: &Arc<Field>, m: u32) -> Self {
        assert!(m >= 1 && field.order.is_multiple_of(m), "label {} does not divide the field order {}", m, field.order);
        Self::dickson_at_theta(field, field.order / m)
    }

    /// Rational coefficient strings, lowest power first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings(field: &Arc<Field>, parts: &[String]) -> Result<Self, CoxeterError> {
        let mut coeffs = Vec::with_capacity(parts.len());
        for p in parts {
            coeffs.push(parse_rational(p)?);
        }
        if coeffs.len() > field.degree() {
            return Ok(Self::from_poly(field, coeffs));
        }
        coeffs.resize(field.degree(), BigRational::zero());
        Ok(AlgebraicReal { field: field.clone(), coeffs })
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CoxeterError> {
    let s = s.trim();
    let bad = || CoxeterError::Parse(format!("bad rational '{}'", s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `-cos(pi/m)`; `-1` for an infinite label.
pub fn embed_cos(field: &Arc<Field>, m: Option<u32>) -> AlgebraicReal {
    match m {
        None => AlgebraicReal::from_integer(field, -1),
        Some(2) => AlgebraicReal::zero(field),
        Some(3) => AlgebraicReal::from_rational(field, BigRational::new((-1).into(), 2.into())),
        Some(m) => {
            let half = BigRational::new((-1).into(), 2.into());
            AlgebraicReal::two_cos_pi_over(field, m).scale(&half)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&AlgebraicReal> for &AlgebraicReal {
            type Output = AlgebraicReal;
            fn $m(self, rhs: &AlgebraicReal) -> AlgebraicReal {
                self.$f(rhs)
            }
        }
        impl $tr<AlgebraicReal> for AlgebraicReal {
            type Output = AlgebraicReal;
            fn $m(self, rhs: AlgebraicReal) -> AlgebraicReal {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&AlgebraicReal> for AlgebraicReal {
            type Output = AlgebraicReal;
            fn $m(self, rhs: &AlgebraicReal) -> AlgebraicReal {
                (&self).$f(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&AlgebraicReal> for &AlgebraicReal {
    type Output = AlgebraicReal;
    /// Panics on division by zero; use [`AlgebraicReal::div_ref`] for a checked form.
    fn div(self, rhs: &AlgebraicReal) -> AlgebraicReal {
        self.div_ref(rhs).expect("division by zero")
    }
}

impl Neg for &AlgebraicReal {
    type Output = AlgebraicReal;
    fn neg(self) -> AlgebraicReal {
        self.neg_ref()
    }
}

impl Neg for AlgebraicReal {
    type Output = AlgebraicReal;
    fn neg(self) -> AlgebraicReal {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_minimal_polynomials() {
        assert_eq!(minimal_polynomial(1), ints(&[0, 1]));
        assert_eq!(minimal_polynomial(2), ints(&[0, 1]));
        assert_eq!(minimal_polynomial(3), ints(&[-1, 1]));
        assert_eq!(minimal_polynomial(4), ints(&[-2, 0, 1]));
        assert_eq!(minimal_polynomial(5), ints(&[-1, -1, 1]));
        assert_eq!(minimal_polynomial(6), ints(&[-3, 0, 1]));
    }

    #[test]
    fn dickson_values() {
        assert_eq!(dickson_poly(2), ints(&[-2, 0, 1]));
        assert_eq!(dickson_poly(3), ints(&[0, -3, 0, 1]));
    }
}
