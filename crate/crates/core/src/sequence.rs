//! Scalar Horadam numbers `W_n = p·W_{n−1} + q·W_{n−2}`, `W_0 = a`, `W_1 = b`,
//! extended to negative `n` through `W_{n−2} = (W_n − p·W_{n−1}) / q`.
//!
//! The plain recurrence ([`horadam_term`]) is the reference every faster or
//! closed-form route is tested against.

use std::fmt;

use crate::error::ParamError;
use crate::quad::{Discriminant, QuadExt};
use crate::rational::Rational;

/// Recurrence coefficients `p, q` and seeds `a = W_0`, `b = W_1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HoradamParams {
    p: Rational,
    q: Rational,
    a: Rational,
    b: Rational,
}

impl HoradamParams {
    /// Rejects `q = 0` and `p² + 4q = 0`.
    pub fn new(p: Rational, q: Rational, a: Rational, b: Rational) -> Result<Self, ParamError> {
        if q.is_zero() {
            return Err(ParamError::ZeroQ);
        }
        if discriminant_of(&p, &q).is_zero() {
            return Err(ParamError::RepeatedRoot {
                p: p.to_string(),
                q: q.to_string(),
            });
        }
        Ok(HoradamParams { p, q, a, b })
    }

    pub fn from_ints(p: i64, q: i64, a: i64, b: i64) -> Result<Self, ParamError> {
        HoradamParams::new(p.into(), q.into(), a.into(), b.into())
    }

    /// `(p,q)`-Fibonacci seeds `(0, 1)`.
    pub fn fibonacci(p: Rational, q: Rational) -> Result<Self, ParamError> {
        HoradamParams::new(p, q, Rational::zero(), Rational::one())
    }

    /// `(p,q)`-Lucas seeds `(2, p)`.
    pub fn lucas(p: Rational, q: Rational) -> Result<Self, ParamError> {
        let b = p.clone();
        HoradamParams::new(p, q, Rational::from(2), b)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `p² + 4q`.
    pub fn discriminant(&self) -> Rational {
        discriminant_of(&self.p, &self.q)
    }

    /// Same `p, q` with different seeds.
    pub fn with_seeds(&self, a: Rational, b: Rational) -> Self {
        HoradamParams {
            p: self.p.clone(),
            q: self.q.clone(),
            a,
            b,
        }
    }

    fn step_forward(&self, older: &Rational, newer: &Rational) -> Rational {
        &self.p * newer + &self.q * older
    }

    fn step_backward(&self, older: &Rational, newer: &Rational) -> Rational {
        // W_{n-2} = (W_n - p W_{n-1}) / q, with q != 0 guaranteed at construction.
        (newer - &(&self.p * older))
            .checked_div(&self.q)
            .expect("q is nonzero")
    }
}

impl fmt::Debug for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p={}, q={}, a={}, b={})",
            self.p, self.q, self.a, self.b
        )
    }
}

fn discriminant_of(p: &Rational, q: &Rational) -> Rational {
    p * p + Rational::from(4) * q.clone()
}

/// `W_n` for any integer `n`, by stepping the recurrence from the seeds.
pub fn horadam_term(params: &HoradamParams, n: i64) -> Rational {
    if n >= 0 {
        let (mut older, mut newer) = (params.a.clone(), params.b.clone());
        for _ in 0..n {
            let next = params.step_forward(&older, &newer);
            older = std::mem::replace(&mut newer, next);
        }
        older
    } else {
        // (older, newer) = (W_{k}, W_{k+1}), walking k down from 0.
        let (mut older, mut newer) = (params.a.clone(), params.b.clone());
        for _ in 0..n.unsigned_abs() {
            let prev = params.step_backward(&older, &newer);
            newer = std::mem::replace(&mut older, prev);
        }
        older
    }
}

/// `W_lo, …, W_hi` in one pass.
pub fn horadam_window(params: &HoradamParams, lo: i64, hi: i64) -> Vec<Rational> {
    if hi < lo {
        return Vec::new();
    }
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    let mut older = horadam_term(params, lo);
    let mut newer = horadam_term(params, lo + 1);
    out.push(older.clone());
    for _ in lo..hi {
        let next = params.step_forward(&older, &newer);
        older = std::mem::replace(&mut newer, next);
        out.push(older.clone());
    }
    out
}

fn fib_params(p: &Rational, q: &Rational) -> Result<HoradamParams, ParamError> {
    HoradamParams::fibonacci(p.clone(), q.clone())
}

/// `(p,q)`-Fibonacci number `𝓕_n`.
pub fn pq_fibonacci(p: &Rational, q: &Rational, n: i64) -> Result<Rational, ParamError> {
    Ok(horadam_term(&fib_params(p, q)?, n))
}

/// `(p,q)`-Lucas number `𝓛_n`.
pub fn pq_lucas(p: &Rational, q: &Rational, n: i64) -> Result<Rational, ParamError> {
    Ok(horadam_term(
        &HoradamParams::lucas(p.clone(), q.clone())?,
        n,
    ))
}

/// `𝓕_{−n}` through the reflection `𝓕_{−n} = −(−q)^{−n}·𝓕_n`.
pub fn neg_index_fib(p: &Rational, q: &Rational, n: i64) -> Result<Rational, ParamError> {
    let fib = pq_fibonacci(p, q, n)?;
    Ok(-(reflection_factor(q, -n) * fib))
}

/// The reflection with the exponent sign flipped, `−(−q)^{n}·𝓕_n`.
///
/// Agrees with [`neg_index_fib`] only when `|q| = 1` or `𝓕_n = 0`; kept so
/// verification reports can show where the two conventions part ways.
pub fn neg_index_fib_flipped_exponent(
    p: &Rational,
    q: &Rational,
    n: i64,
) -> Result<Rational, ParamError> {
    let fib = pq_fibonacci(p, q, n)?;
    Ok(-(reflection_factor(q, n) * fib))
}

fn reflection_factor(q: &Rational, exp: i64) -> Rational {
    (-q).pow(exp).expect("q is nonzero")
}

/// `(−q)^n` for any integer `n`.
pub fn neg_q_pow(q: &Rational, n: i64) -> Rational {
    reflection_factor(q, n)
}

/// `(𝓕_n, 𝓛_n)` in `O(log n)` ring operations.
///
/// Doubling uses `𝓕_{2k} = 𝓕_k·𝓛_k` and `𝓛_{2k} = 𝓛_k² − 2(−q)^k`; the odd
/// step uses `𝓕_{k+1} = (p𝓕_k + 𝓛_k)/2` and `𝓛_{k+1} = (D𝓕_k + p𝓛_k)/2`.
pub fn fast_double(p: &Rational, q: &Rational, n: u64) -> Result<(Rational, Rational), ParamError> {
    fib_params(p, q)?;
    let disc = discriminant_of(p, q);
    let minus_q = -q;
    let two = Rational::from(2);
    let (mut fib, mut luc, mut power) = (Rational::zero(), two.clone(), Rational::one());
    if n == 0 {
        return Ok((fib, luc));
    }
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let doubled_luc = &luc * &luc - &two * &power;
        fib = &fib * &luc;
        luc = doubled_luc;
        power = &power * &power;
        if (n >> bit) & 1 == 1 {
            let next_fib = (p * &fib + &luc).half();
            let next_luc = (&disc * &fib + p * &luc).half();
            fib = next_fib;
            luc = next_luc;
            power = &power * &minus_q;
        }
    }
    Ok((fib, luc))
}

/// `(𝓕_n, 𝓛_n)` by stepping both recurrences `n` times.
pub fn naive_fib_lucas(
    p: &Rational,
    q: &Rational,
    n: u64,
) -> Result<(Rational, Rational), ParamError> {
    let fib = fib_params(p, q)?;
    let luc = HoradamParams::lucas(p.clone(), q.clone())?;
    let (mut f0, mut f1) = (Rational::zero(), Rational::one());
    let (mut l0, mut l1) = (Rational::from(2), p.clone());
    for _ in 0..n {
        let f2 = fib.step_forward(&f0, &f1);
        f0 = std::mem::replace(&mut f1, f2);
        let l2 = luc.step_forward(&l0, &l1);
        l0 = std::mem::replace(&mut l1, l2);
    }
    Ok((f0, l0))
}

/// Characteristic roots and Binet constants of a parameter set.
#[derive(Clone, Debug)]
pub struct DerivedConstants {
    pub disc: Discriminant,
    /// `α = (p + √D)/2`
    pub alpha: QuadExt,
    /// `β = (p − √D)/2`
    pub beta: QuadExt,
    /// `Δ = α − β = √D`
    pub delta: QuadExt,
    /// `A = b − aβ`
    pub big_a: QuadExt,
    /// `B = b − aα`
    pub big_b: QuadExt,
    /// `AB = b² − pab − qa²`
    pub ab: Rational,
}

impl DerivedConstants {
    pub fn new(params: &HoradamParams) -> Self {
        let disc = Discriminant::new(params.discriminant()).expect("validated parameters");
        let half_p = params.p.half();
        let half = Rational::one().half();
        let alpha = disc.element(half_p.clone(), half.clone());
        let beta = disc.element(half_p, -half);
        let delta = &alpha - &beta;
        let b = disc.embed(params.b.clone());
        let a = disc.embed(params.a.clone());
        let big_a = &b - &(&a * &beta);
        let big_b = &b - &(&a * &alpha);
        DerivedConstants {
            ab: ab_product(params),
            disc,
            alpha,
            beta,
            delta,
            big_a,
            big_b,
        }
    }
}

/// `AB = (b − aβ)(b − aα) = b² − pab − qa²`.
pub fn ab_product(params: &HoradamParams) -> Rational {
    let (p, q, a, b) = (&params.p, &params.q, &params.a, &params.b);
    b * b - &(&(p * a) * b) - &(q * &(a * a))
}

/// `W_n = (Aαⁿ − Bβⁿ)/(α − β)` evaluated in `Q(√D)`.
pub fn binet_scalar(params: &HoradamParams, n: i64) -> QuadExt {
    binet_with(&DerivedConstants::new(params), n)
}

pub(crate) fn binet_with(c: &DerivedConstants, n: i64) -> QuadExt {
    // α and β have norm −q ≠ 0, Δ has norm −D ≠ 0.
    let an = c.alpha.pow(n).expect("α is invertible");
    let bn = c.beta.pow(n).expect("β is invertible");
    let num = &(&c.big_a * &an) - &(&c.big_b * &bn);
    num.try_div(&c.delta).expect("Δ is invertible")
}
