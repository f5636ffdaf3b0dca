mod common;

use common::{complex_from_spec, flatten, rng, spec};
use proptest::prelude::*;
use quatcon::equations::{apply_operator, verify_solution_set};
use quatcon::gen;
use quatcon::matrix::{join_complex, split_complex, ComplexSplit};
use quatcon::{
    classify_m_sigma, homogeneous_basis_jordan, jordan_spec_complex, solve_general, solve_structured,
    solve_via_canonical, verify_solution, CRat, EquationKind, Mat, QRat, Rat, Sigma, SolutionSet,
};
use rand::Rng;

const KINDS: [EquationKind; 2] = [EquationKind::SylvesterLike, EquationKind::SteinLike];
const SIGMAS: [Sigma; 2] = [Sigma::One, Sigma::I];

fn setup(seed: u64, max_dim: usize) -> (rand_chacha::ChaCha8Rng, Mat<CRat>, Mat<CRat>, Sigma, EquationKind) {
    let mut r = rng(seed);
    let (sa, sb) = (spec(&mut r, max_dim), spec(&mut r, max_dim));
    let a = complex_from_spec(&mut r, &sa);
    let b = complex_from_spec(&mut r, &sb);
    let sigma = SIGMAS[r.gen_range(0..2)];
    let kind = KINDS[r.gen_range(0..2)];
    (r, a, b, sigma, kind)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn solvers_agree_and_verify(seed in any::<u64>()) {
        let (mut r, ac, bc, sigma, kind) = setup(seed, 3);
        let (a, b) = (Mat::from_complex(&ac), Mat::from_complex(&bc));
        let x0 = gen::quaternion_matrix(&mut r, a.rows(), b.rows(), 2);
        let c = if r.gen_bool(0.5) { apply_operator(&a, &b, &x0, sigma, kind).unwrap() } else { gen::quaternion_matrix(&mut r, a.rows(), b.rows(), 2) };
        let st = solve_structured(&ac, &bc, &c, sigma, kind).unwrap();
        let vc = solve_via_canonical(&a, &b, &c, sigma, kind).unwrap();
        let ge = solve_general(&a, &b, &c, sigma, kind).unwrap();
        prop_assert_eq!(st.status(), vc.status());
        prop_assert_eq!(st.status(), ge.status());
        for set in [&st, &vc, &ge] {
            prop_assert!(verify_solution_set(&a, &b, &c, set, sigma, kind).unwrap());
        }
        // Closure: particular plus a random real combination still solves.
        if let SolutionSet::Affine { particular, basis } = &st {
            let mut x = particular.clone();
            for y in basis {
                let t = QRat::from_ints(r.gen_range(-3..=3), 0, 0, 0);
                x = x.add(&y.scale_left(&t)).unwrap();
            }
            prop_assert!(verify_solution(&a, &b, &c, &x, sigma, kind).unwrap());
        }
    }

    #[test]
    fn classification_matches_uniqueness(seed in any::<u64>()) {
        let (mut r, ac, bc, sigma, kind) = setup(seed, 3);
        let m = classify_m_sigma(&jordan_spec_complex(&ac).unwrap(), &jordan_spec_complex(&bc).unwrap(), sigma, kind);
        for _ in 0..5 {
            let c = gen::quaternion_matrix(&mut r, ac.rows(), bc.rows(), 3);
            let s = solve_structured(&ac, &bc, &c, sigma, kind).unwrap();
            prop_assert_eq!(m.is_empty(), s.is_unique());
        }
    }

    #[test]
    fn parts_decouple(seed in any::<u64>()) {
        let (mut r, ac, bc, sigma, kind) = setup(seed, 3);
        let (m, n) = (ac.rows(), bc.rows());
        let c1 = gen::complex_matrix(&mut r, m, n, 3);
        let (c2, c2b) = (gen::complex_matrix(&mut r, m, n, 3), gen::complex_matrix(&mut r, m, n, 3));
        let join = |first: &Mat<CRat>, second: &Mat<CRat>| join_complex(&ComplexSplit { first: first.clone(), second: second.clone() });
        let s = solve_structured(&ac, &bc, &join(&c1, &c2), sigma, kind).unwrap();
        let t = solve_structured(&ac, &bc, &join(&c1, &c2b), sigma, kind).unwrap();
        let u = solve_structured(&ac, &bc, &join(&c2b, &c2), sigma, kind).unwrap();
        if let (Some(x), Some(y), Some(z)) = (s.particular(), t.particular(), u.particular()) {
            prop_assert_eq!(split_complex(x).first, split_complex(y).first);
            prop_assert_eq!(split_complex(x).second, split_complex(z).second);
        }
        // Against the independent solver when the answer is unique.
        if s.is_unique() {
            let (a, b) = (Mat::from_complex(&ac), Mat::from_complex(&bc));
            let g = solve_general(&a, &b, &join(&c1, &Mat::zeros(m, n)), sigma, kind).unwrap();
            prop_assert_eq!(split_complex(g.particular().unwrap()).first, split_complex(s.particular().unwrap()).first);
        }
    }

    #[test]
    fn homogeneous_dimension_formula(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (sa, sb) = (spec(&mut r, 4), spec(&mut r, 4));
        let sigma = SIGMAS[r.gen_range(0..2)];
        let (a, b) = (sa.quaternion_matrix(), sb.quaternion_matrix());
        let zero = Mat::zeros(sa.dim(), sb.dim());
        let s2 = CRat::real(Rat::from_int(sigma.square()));
        let mut expected = 0;
        for x in sa.blocks() {
            for y in sb.blocks() {
                let k = x.size.min(y.size);
                expected += if x.eigenvalue == y.eigenvalue { 2 * k } else { 0 };
                expected += if x.eigenvalue == &s2 * &y.eigenvalue.conj() { 2 * k } else { 0 };
            }
        }
        let ge = solve_general(&a, &b, &zero, sigma, EquationKind::SylvesterLike).unwrap();
        prop_assert_eq!(ge.dim(), Some(expected));
        let closed: Vec<Mat<QRat>> = homogeneous_basis_jordan(&sa, &sb, sigma).into_iter().flat_map(|(_, m)| m).collect();
        prop_assert_eq!(closed.len(), expected);
        for y in &closed {
            prop_assert!(verify_solution(&a, &b, &zero, y, sigma, EquationKind::SylvesterLike).unwrap());
        }
        if !closed.is_empty() {
            let rows: Vec<Vec<Rat>> = closed.iter().map(flatten).collect();
            prop_assert_eq!(Mat::from_rows(rows).rank(), expected);
        }
    }
}

#[test]
fn shape_errors_are_reported() {
    let a = Mat::<QRat>::identity(2);
    let c = Mat::<QRat>::zeros(3, 2);
    assert!(matches!(
        solve_general(&a, &a, &c, Sigma::One, EquationKind::SylvesterLike),
        Err(quatcon::Error::ShapeMismatch { .. })
    ));
    assert!(matches!(
        solve_via_canonical(&a, &Mat::zeros(2, 3), &Mat::zeros(2, 3), Sigma::One, EquationKind::SteinLike),
        Err(quatcon::Error::NotSquare(2, 3))
    ));
}
