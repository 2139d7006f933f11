//! Seeded random objects shared by the integration tests.
#![allow(dead_code)]

use maxrep_core::fields::{int, rat, Field, OrderSpec, Poly, RatFunc, Rational};
use maxrep_core::linalg::{Lagrangian, Matrix, SymplecticForm};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut TestRng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound.max(1)))
}

pub fn nonzero_rational(rng: &mut TestRng, bound: i64) -> Rational {
    loop {
        let q = rational(rng, bound);
        if q != int(0) {
            return q;
        }
    }
}

pub fn poly(rng: &mut TestRng, deg: usize) -> Poly<Rational> {
    Poly::new((0..=deg).map(|_| rational(rng, 5)).collect())
}

/// Quotient of random polynomials of degree at most `deg`.
pub fn ratfunc(rng: &mut TestRng, deg: usize) -> RatFunc {
    let d = rng.gen_range(0..=deg);
    let num = poly(rng, d);
    loop {
        let d = rng.gen_range(0..=deg);
        let den = poly(rng, d);
        if let Some(f) = RatFunc::new(num.clone(), den) {
            return f;
        }
    }
}

pub fn nonzero_ratfunc(rng: &mut TestRng, deg: usize) -> RatFunc {
    loop {
        let f = ratfunc(rng, deg);
        if f != RatFunc::zero() {
            return f;
        }
    }
}

/// `c * X^e` with `c` a nonzero rational.
pub fn monomial(rng: &mut TestRng, max_exp: i64) -> RatFunc {
    let c = RatFunc::constant(nonzero_rational(rng, 4));
    let e = rng.gen_range(-max_exp..=max_exp);
    c * &RatFunc::x().pow(e).expect("X is invertible")
}

pub fn order(rng: &mut TestRng) -> OrderSpec {
    match rng.gen_range(0..4) {
        0 => OrderSpec::AtPlus(rational(rng, 3)),
        1 => OrderSpec::AtMinus(rational(rng, 3)),
        2 => OrderSpec::PlusInfinity,
        _ => OrderSpec::MinusInfinity,
    }
}

pub fn all_orders() -> Vec<OrderSpec> {
    vec![
        OrderSpec::AtPlus(int(0)),
        OrderSpec::AtMinus(rat(1, 2)),
        OrderSpec::PlusInfinity,
        OrderSpec::MinusInfinity,
    ]
}

pub fn symmetric<T: Clone>(n: usize, mut entry: impl FnMut() -> T) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<Option<T>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i..n {
            let e = entry();
            rows[i][j] = Some(e.clone());
            rows[j][i] = Some(e);
        }
    }
    rows.into_iter()
        .map(|r| r.into_iter().map(|e| e.expect("filled")).collect())
        .collect()
}

fn invertible_q(rng: &mut TestRng, n: usize) -> Matrix<Rational> {
    loop {
        let a = Matrix::from_fn(n, n, |_, _| rational(rng, 3));
        if a.det().unwrap() != int(0) {
            return a;
        }
    }
}

/// A product of shears and a block-diagonal factor over `Q`.
pub fn symplectic_q(rng: &mut TestRng, n: usize) -> Matrix<Rational> {
    let form = SymplecticForm::new(n);
    let s1 = Matrix::from_rows(symmetric(n, || rational(rng, 3))).unwrap();
    let s2 = Matrix::from_rows(symmetric(n, || rational(rng, 3))).unwrap();
    let a = invertible_q(rng, n);
    let u = form.upper_shear(&s1).unwrap();
    let l = form.lower_shear(&s2).unwrap();
    let d = form.block_diagonal(&a).unwrap();
    &(&u * &l) * &d
}

/// `diag(X^a_i, X^-a_i)` times a shear with entries of degree at most 2,
/// so entries have degree at most 3.
pub fn symplectic_k(rng: &mut TestRng, n: usize) -> Matrix<RatFunc> {
    let form = SymplecticForm::new(n);
    let d: Vec<RatFunc> = (0..n)
        .map(|_| {
            let c = RatFunc::constant(nonzero_rational(rng, 3));
            c * &RatFunc::x().pow(rng.gen_range(-1..=1)).unwrap()
        })
        .collect();
    let s = Matrix::from_rows(symmetric(n, || RatFunc::from_poly(poly(rng, 2)))).unwrap();
    let shear = if rng.gen_bool(0.5) {
        form.upper_shear(&s).unwrap()
    } else {
        form.lower_shear(&s).unwrap()
    };
    &form.diagonal(&d).unwrap() * &shear
}

/// A Lagrangian over `Q`: a graph moved by a random symplectic matrix,
/// with a bias towards small entries so that coincidences happen.
pub fn lagrangian_q(rng: &mut TestRng, n: usize) -> Lagrangian<Rational> {
    let s = Matrix::from_rows(symmetric(n, || int(rng.gen_range(-1..=1)))).unwrap();
    let base = Lagrangian::graph(&s).unwrap();
    match rng.gen_range(0..3) {
        0 => base,
        1 => Lagrangian::vertical(n),
        _ => base.apply(&symplectic_q(rng, n)).unwrap(),
    }
}

use maxrep_core::reps::{BoundaryPoint, DiagonalModel, FramingTable, GroupPresentation, RepTable};
use maxrep_core::valuations::ValuationSpec;

/// A hyperbolic element of a diagonal model with its framing on a few
/// orbit points, set up so that `(minus, x, g x, plus)` is positively
/// oriented.
pub struct EigenCase {
    pub exponents: Vec<u32>,
    pub points: Vec<BoundaryPoint>,
    pub model: DiagonalModel,
    pub mu: RatFunc,
    pub framing: FramingTable<RatFunc>,
    pub rep: RepTable<RatFunc>,
    pub minus: String,
    pub plus: String,
    /// Labels usable as the auxiliary point of a period.
    pub aux: Vec<String>,
}

pub fn eigen_case(rng: &mut TestRng, n: usize, conjugate: bool) -> EigenCase {
    let conj = if conjugate { symplectic_k(rng, n) } else { Matrix::identity(2 * n) };
    eigen_case_with(rng, conj)
}

/// As [`eigen_case`], with the model moved by `conj`.
pub fn eigen_case_with(rng: &mut TestRng, conj: Matrix<RatFunc>) -> EigenCase {
    let n = conj.rows() / 2;
    let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let ord = OrderSpec::AtPlus(int(0));
    let model = DiagonalModel::new(exps.clone(), conj, ord.clone()).unwrap();
    let mu = loop {
        let m = monomial(rng, 2);
        if m.num().degree() != m.den().degree() {
            break m;
        }
    };
    let (rep_pt, att_pt) = model.fixed_points(&mu);
    // Points on the side where the orbit runs from `minus` to `plus`.
    let toward_zero = rep_pt == BoundaryPoint::Infinity;
    let mut aux_pts = Vec::new();
    for _ in 0..2 {
        let m = monomial(rng, 2);
        let m = maxrep_core::fields::abs(&m, &ord);
        aux_pts.push(BoundaryPoint::Finite(if toward_zero { -m } else { m }));
    }
    let mut pts = vec![rep_pt.clone(), att_pt.clone()];
    for p in &aux_pts {
        pts.push(p.clone());
        pts.push(model.act(&mu, p));
    }
    let framing = model.framing(&pts).unwrap();
    let g = model.hyperbolic(&mu).unwrap();
    let pres = GroupPresentation::new(vec!["g".into()], vec![], vec![]).unwrap();
    let rep = RepTable::new(pres, vec![g], ord, ValuationSpec::Adic(int(0))).unwrap();
    let mut aux: Vec<String> = aux_pts.iter().map(ToString::to_string).collect();
    aux.dedup();
    EigenCase {
        exponents: exps,
        points: pts,
        model,
        mu,
        framing,
        rep,
        minus: rep_pt.to_string(),
        plus: att_pt.to_string(),
        aux,
    }
}

/// Distinct sorted points of the model on random monomials and `∞`.
pub fn model_points(rng: &mut TestRng, model: &DiagonalModel, count: usize) -> Vec<BoundaryPoint> {
    let mut pts = vec![BoundaryPoint::Infinity];
    while pts.len() < count {
        let p = BoundaryPoint::Finite(monomial(rng, 3));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts.sort_by(|a, b| model.compare(a, b));
    pts
}

/// A matrix over `Q` seen inside `Q(X)`.
pub fn lift(m: &Matrix<Rational>) -> Matrix<RatFunc> {
    m.map(|q| RatFunc::constant(q.clone()))
}
