//! Horadam quaternions `Q_{w,n} = W_n + W_{n+1}i + W_{n+2}j + W_{n+3}k` and the
//! constant quaternions their identities are written in.

use crate::error::ParamError;
use crate::quad::QuadExt;
use crate::quaternion::Quaternion;
use crate::rational::Rational;
use crate::sequence::{binet_with, horadam_term, horadam_window, DerivedConstants, HoradamParams};

pub type RatQuat = Quaternion<Rational>;
pub type QuadQuat = Quaternion<QuadExt>;

/// Precomputed scalar terms over an index window, with on-demand fallback.
#[derive(Clone, Debug)]
pub struct TermWindow {
    params: HoradamParams,
    lo: i64,
    values: Vec<Rational>,
}

impl TermWindow {
    pub fn new(params: HoradamParams, lo: i64, hi: i64) -> Self {
        let values = horadam_window(&params, lo, hi);
        TermWindow { params, lo, values }
    }

    pub fn params(&self) -> &HoradamParams {
        &self.params
    }

    pub fn scalar(&self, n: i64) -> Rational {
        n.checked_sub(self.lo)
            .and_then(|off| usize::try_from(off).ok())
            .and_then(|off| self.values.get(off))
            .cloned()
            .unwrap_or_else(|| horadam_term(&self.params, n))
    }

    /// Four consecutive scalars as a quaternion.
    pub fn quat(&self, n: i64) -> RatQuat {
        Quaternion::new(
            self.scalar(n),
            self.scalar(n + 1),
            self.scalar(n + 2),
            self.scalar(n + 3),
        )
    }
}

/// Which special sequence [`special_quat`] should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    PqFibonacci,
    PqLucas,
}

/// Index window cached by [`HoradamQuatContext::new`].
pub const DEFAULT_WINDOW: (i64, i64) = (-40, 48);

/// Everything the identities need for one parameter set.
#[derive(Clone, Debug)]
pub struct HoradamQuatContext {
    pub params: HoradamParams,
    pub consts: DerivedConstants,
    /// `ω = qi + pj − k`
    pub omega: RatQuat,
    /// `[q] = 1 − q + q² − q³`
    pub bracket_q: Rational,
    /// `Q_{𝓛,0}`
    pub ql0: RatQuat,
    /// `Q_{𝓕,0}`
    pub qf0: RatQuat,
    pub r: Rational,
    pub s: Rational,
    /// `1 + αi + α²j + α³k`
    pub alpha_bar: QuadQuat,
    /// `1 + βi + β²j + β³k`
    pub beta_bar: QuadQuat,
    general: TermWindow,
    fib: TermWindow,
    lucas: TermWindow,
}

impl HoradamQuatContext {
    pub fn new(params: HoradamParams) -> Self {
        let (lo, hi) = DEFAULT_WINDOW;
        Self::with_window(params, lo, hi)
    }

    /// Caches `W_n`, `𝓕_n`, `𝓛_n` for `n ∈ [lo, hi]`.
    pub fn with_window(params: HoradamParams, lo: i64, hi: i64) -> Self {
        let (p, q) = (params.p().clone(), params.q().clone());
        let consts = DerivedConstants::new(&params);
        let fib = TermWindow::new(params.with_seeds(Rational::zero(), Rational::one()), lo, hi);
        let lucas = TermWindow::new(params.with_seeds(Rational::from(2), p.clone()), lo, hi);
        let general = TermWindow::new(params.clone(), lo, hi);
        let omega = Quaternion::new(Rational::zero(), q.clone(), p.clone(), -Rational::one());
        let bracket_q = Rational::one() - &q + q.pow(2).unwrap() - q.pow(3).unwrap();
        let (r, s) = rs_from(&p, &q, &fib);
        let power_quat = |root: &QuadExt| {
            let sq = root * root;
            let cube = &sq * root;
            Quaternion::new(consts.disc.one(), root.clone(), sq, cube)
        };
        HoradamQuatContext {
            ql0: lucas.quat(0),
            qf0: fib.quat(0),
            alpha_bar: power_quat(&consts.alpha),
            beta_bar: power_quat(&consts.beta),
            params,
            consts,
            omega,
            bracket_q,
            r,
            s,
            general,
            fib,
            lucas,
        }
    }

    pub fn p(&self) -> &Rational {
        self.params.p()
    }

    pub fn q(&self) -> &Rational {
        self.params.q()
    }

    /// `W_n`.
    pub fn w(&self, n: i64) -> Rational {
        self.general.scalar(n)
    }

    /// `𝓕_n`.
    pub fn fib(&self, n: i64) -> Rational {
        self.fib.scalar(n)
    }

    /// `𝓛_n`.
    pub fn lucas(&self, n: i64) -> Rational {
        self.lucas.scalar(n)
    }

    /// `Q_{w,n}` from four consecutive scalar terms.
    pub fn qw_term(&self, n: i64) -> RatQuat {
        self.general.quat(n)
    }

    /// `Q_{𝓕,n}`.
    pub fn fib_quat(&self, n: i64) -> RatQuat {
        self.fib.quat(n)
    }

    /// `Q_{𝓛,n}`.
    pub fn lucas_quat(&self, n: i64) -> RatQuat {
        self.lucas.quat(n)
    }

    /// `Q_{w,n} = (A·α̲·αⁿ − B·β̲·βⁿ) / (α − β)`.
    pub fn binet_quat(&self, n: i64) -> QuadQuat {
        let c = &self.consts;
        let a_term = self.alpha_bar.scale(&(&c.big_a * &root_pow(&c.alpha, n)));
        let b_term = self.beta_bar.scale(&(&c.big_b * &root_pow(&c.beta, n)));
        (&a_term - &b_term).scale(&delta_inverse(c))
    }

    /// `Q_{𝓕,n} = (α̲αⁿ − β̲βⁿ) / (α − β)`.
    pub fn binet_fib_quat(&self, n: i64) -> QuadQuat {
        let c = &self.consts;
        let a_term = self.alpha_bar.scale(&root_pow(&c.alpha, n));
        let b_term = self.beta_bar.scale(&root_pow(&c.beta, n));
        (&a_term - &b_term).scale(&delta_inverse(c))
    }

    /// `Q_{𝓛,n} = α̲αⁿ + β̲βⁿ`.
    pub fn binet_lucas_quat(&self, n: i64) -> QuadQuat {
        let c = &self.consts;
        &self.alpha_bar.scale(&root_pow(&c.alpha, n)) + &self.beta_bar.scale(&root_pow(&c.beta, n))
    }

    /// Scalar `W_n` by its Binet formula.
    pub fn binet_scalar(&self, n: i64) -> QuadExt {
        binet_with(&self.consts, n)
    }

    /// `Q_{w,0} = a + bi + (pb+qa)j + ((p²+q)b + pqa)k` written out symbolically.
    pub fn seed_q0(&self) -> RatQuat {
        let (p, q, a, b) = (self.p(), self.q(), self.params.a(), self.params.b());
        let p2q = p * p + q.clone();
        Quaternion::new(a.clone(), b.clone(), p * b + q * a, &p2q * b + &(p * q) * a)
    }

    /// `Q_{w,1} = b + (pb+qa)i + ((p²+q)b+pqa)j + ((p³+2pq)b + q(p²+q)a)k`.
    pub fn seed_q1(&self) -> RatQuat {
        let (p, q, a, b) = (self.p(), self.q(), self.params.a(), self.params.b());
        let p2q = p * p + q.clone();
        let p3 = &(p * p) * p;
        let two_pq = Rational::from(2) * (p * q);
        Quaternion::new(
            b.clone(),
            p * b + q * a,
            &p2q * b + &(p * q) * a,
            (p3 + two_pq) * b.clone() + &(q * &p2q) * a,
        )
    }

    /// Lifts a rational quaternion into this context's extension ring.
    pub fn lift(&self, u: &RatQuat) -> QuadQuat {
        u.lift(&self.consts.disc)
    }

    pub fn embed(&self, r: &Rational) -> QuadExt {
        self.consts.disc.embed(r.clone())
    }
}

fn root_pow(root: &QuadExt, n: i64) -> QuadExt {
    root.pow(n).expect("characteristic roots have norm -q != 0")
}

fn delta_inverse(c: &DerivedConstants) -> QuadExt {
    c.delta.inverse().expect("Δ has norm -D != 0")
}

fn rs_from(p: &Rational, q: &Rational, fib: &TermWindow) -> (Rational, Rational) {
    let even = fib.scalar(2) + fib.scalar(4) + fib.scalar(6);
    let odd = fib.scalar(1) + fib.scalar(3) + fib.scalar(5);
    let r = Rational::one() + &p.half() * &even + q * &odd;
    (r, even.half())
}

/// `Q_{w,n}` for a parameter set.
pub fn qw_term(params: &HoradamParams, n: i64) -> RatQuat {
    Quaternion::new(
        horadam_term(params, n),
        horadam_term(params, n + 1),
        horadam_term(params, n + 2),
        horadam_term(params, n + 3),
    )
}

/// `Q_{𝓕,n}` or `Q_{𝓛,n}` for the given `p, q`.
pub fn special_quat(
    kind: SpecialKind,
    p: &Rational,
    q: &Rational,
    n: i64,
) -> Result<RatQuat, ParamError> {
    let params = match kind {
        SpecialKind::PqFibonacci => HoradamParams::fibonacci(p.clone(), q.clone())?,
        SpecialKind::PqLucas => HoradamParams::lucas(p.clone(), q.clone())?,
    };
    Ok(qw_term(&params, n))
}

/// `r_{p,q} = 1 + (p/2)(𝓕₂+𝓕₄+𝓕₆) + q(𝓕₁+𝓕₃+𝓕₅)` and `s_{p,q} = (𝓕₂+𝓕₄+𝓕₆)/2`.
pub fn rs_constants(p: &Rational, q: &Rational) -> Result<(Rational, Rational), ParamError> {
    let fib = TermWindow::new(HoradamParams::fibonacci(p.clone(), q.clone())?, 0, 6);
    Ok(rs_from(p, q, &fib))
}
