use hopf_link_core::coalg::{dual_group_algebra, sweedler, taft};
use hopf_link_core::groups::GroupTable;
use hopf_link_core::linalg::{ExactMatrix, Subspace, Vector};
use hopf_link_core::matcalc::{check_multiplicative, odot, HMatrix, MultMatrix, Side};
use hopf_link_core::radical::analyze;
use hopf_link_core::scalar::{euler_phi, rat_int};
use hopf_link_core::Cyclo;
use proptest::prelude::*;

const ORDERS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn cyclo(order: u32) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec(-4i64..=4, euler_phi(order))
        .prop_map(move |cs| Cyclo::from_coeffs(order, cs.into_iter().map(rat_int).collect()))
}

fn triple() -> impl Strategy<Value = (Cyclo, Cyclo, Cyclo)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|n| (cyclo(n), cyclo(n), cyclo(n)))
}

fn int_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(move |rows| {
            ExactMatrix::from_rows(c, rows.into_iter().map(|row| row.into_iter().map(Cyclo::from_int).collect()).collect())
        })
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=max)
        .prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(Cyclo::from_int).collect()).collect())
}

/// Unit lower triangular times unit upper triangular.
fn invertible(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |xs| {
        let mut l = ExactMatrix::identity(n);
        let mut u = ExactMatrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                l.set(i, j, Cyclo::from_int(xs[i * n + j]));
                u.set(j, i, Cyclo::from_int(xs[j * n + i]));
            }
        }
        l.mul(&u).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Cyclo::zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn roots_of_unity(n in prop::sample::select(ORDERS.to_vec()), k in 0i64..24) {
        let z = Cyclo::zeta_pow(n, k);
        prop_assert!(z.pow(n as u64).is_one());
        prop_assert_eq!(z * Cyclo::zeta_pow(n, -k), Cyclo::one());
    }

    #[test]
    fn rref_is_idempotent(m in int_matrix(5, 6)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn kernel_and_rank(m in int_matrix(5, 6)) {
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn dimension_formula(a in vectors(5, 4), b in vectors(5, 4)) {
        let a = Subspace::from_vectors(5, a);
        let b = Subspace::from_vectors(5, b);
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains(&a).unwrap() && a.contains(&i).unwrap() && b.contains(&i).unwrap());
    }

    #[test]
    fn annihilator_is_involutive(a in vectors(6, 4)) {
        let a = Subspace::from_vectors(6, a);
        let ann = a.annihilator();
        prop_assert_eq!(ann.dim() + a.dim(), 6);
        prop_assert_eq!(ann.annihilator(), a);
    }

    #[test]
    fn inverse_round_trip(l in invertible(4)) {
        let inv = l.inverse().unwrap();
        prop_assert!(l.mul(&inv).unwrap().is_identity());
        prop_assert!(inv.mul(&l).unwrap().is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn similarity_preserves_basic_matrices(l in invertible(2)) {
        let h = dual_group_algebra(&GroupTable::symmetric(3));
        let data = analyze(&h).unwrap();
        let c = data.simples.iter().find(|s| s.size() == 2).unwrap();
        let conj = c.matrix.mat().conjugate(&l).unwrap();
        prop_assert!(check_multiplicative(h.coalgebra(), &conj));
        let m = MultMatrix::new(h.coalgebra(), conj).unwrap();
        prop_assert!(m.is_basic() && m.similar(&c.matrix));
    }

    #[test]
    fn odot_transpose_and_unit(seed in prop::collection::vec(-2i64..=2, 16)) {
        let h = sweedler();
        let n = h.dim();
        let entry = |k: usize| -> Vector { (0..n).map(|t| Cyclo::from_int(seed[(k * n + t) % seed.len()])).collect() };
        let a = HMatrix::new(2, 1, n, vec![entry(0), entry(1)]).unwrap();
        let b = HMatrix::new(1, 2, n, vec![entry(2), entry(3)]).unwrap();
        let lhs = odot(&h, &a, &b, Side::Left).unwrap().transpose();
        prop_assert_eq!(lhs, odot(&h, &a.transpose(), &b.transpose(), Side::Left).unwrap());
        let one = HMatrix::identity(1, h.unit().unwrap());
        prop_assert_eq!(odot(&h, &one, &b, Side::Left).unwrap(), b.clone());
        prop_assert_eq!(odot(&h, &b, &one, Side::Right).unwrap(), b);
    }
}

#[test]
fn taft_filtration_grows_by_one_layer_per_degree() {
    for n in [2usize, 3, 4] {
        let h = taft(n, &Cyclo::zeta(n as u32)).unwrap();
        let data = analyze(&h).unwrap();
        let dims: Vec<usize> = data.filtration.iter().map(|s| s.dim()).collect();
        let want: Vec<usize> = (1..=n).map(|k| k * n).collect();
        assert_eq!(dims, want);
    }
}
