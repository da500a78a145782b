//! Randomized invariants of the chain, subspace and spectral layers.

use std::collections::BTreeSet;

use proptest::prelude::*;

use hodgehyper::chains::{restrict, restricted_adjoint};
use hodgehyper::hypergraph::format_hypergraph;
use hodgehyper::scalar::rat_int;
use hodgehyper::spectra::{circ_eq, eigen_transfer, quasi_spectrum, spectrum, CMP_REL_TOL};
use hodgehyper::subspace::{image, kernel};
use hodgehyper::*;

fn small_hypergraph() -> impl Strategy<Value = Hypergraph> {
    prop::collection::vec(prop::collection::btree_set(0u8..6, 1..=4), 1..=8).prop_map(|sets| {
        let dedup: BTreeSet<BTreeSet<u8>> = sets.into_iter().collect();
        Hypergraph::new(dedup.into_iter().map(|s| {
            Hyperedge::new(s.into_iter().map(|i| Vertex::new(format!("v{i}")))).unwrap()
        }))
    })
}

/// One of the four weight classes over the closure of `h`, picked by
/// `kind`; the table case copies an evaluation weight face by face so
/// it satisfies the compatibility identity.
fn weight_for(h: &Hypergraph, kind: u8, seed: u64) -> Weight {
    match kind % 4 {
        0 => Weight::Trivial,
        1 => Weight::Zero,
        2 => random_evaluation_weight(h, seed),
        _ => {
            let eval = random_evaluation_weight(h, seed);
            let mut values = std::collections::BTreeMap::new();
            for e in h.closure().hypergraph().edges() {
                for f in e.faces() {
                    values.insert((e.clone(), f.clone()), eval.phi(e, &f).unwrap());
                }
            }
            Weight::Table { values }
        }
    }
}

fn int_matrix(max_dim: usize) -> impl Strategy<Value = Matrix<f64>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-5i64..=5, r * c)
            .prop_map(move |data| Matrix::from_i64(r, c, &data))
    })
}

/// Diagonal matrix sending each degree-n basis simplex to its
/// 1/w(sigma) multiple, for an evaluation weight.
fn inverse_rescaling(c: &WeightedComplex<Rat>, phi: &Weight, n: usize) -> Matrix<Rat> {
    let Weight::Evaluation { w, .. } = phi else {
        panic!("evaluation weight expected");
    };
    let basis = c.basis(n).expect("degree in range");
    let mut m = Matrix::zeros(basis.dim(), basis.dim());
    for (i, simplex) in basis.simplices().iter().enumerate() {
        m.set(i, i, rat_int(1) / w[simplex].clone());
    }
    m
}

fn inner(g: &Matrix<Rat>, u: &[Rat], v: &[Rat]) -> Rat {
    let gv = g.mul_vec(v);
    u.iter()
        .zip(&gv)
        .fold(rat_int(0), |acc, (a, b)| acc + a.clone() * b.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Composing consecutive weighted boundary maps gives zero for
    /// every weight class.
    #[test]
    fn boundary_squares_to_zero(h in small_hypergraph(), kind in 0u8..4, seed in 0u64..1000) {
        let phi = weight_for(&h, kind, seed);
        let c = WeightedComplex::<Rat>::new(&h, &phi).unwrap();
        let top = c.top_degree().unwrap_or(0);
        for n in 0..=top {
            prop_assert!(c.boundary(n).mul(&c.boundary(n + 1)).is_zero_matrix());
        }
    }

    /// Taking the closure twice changes nothing.
    #[test]
    fn closure_is_idempotent(h in small_hypergraph()) {
        let once = h.closure();
        let twice = once.hypergraph().closure();
        prop_assert_eq!(
            format_hypergraph(once.hypergraph()),
            format_hypergraph(twice.hypergraph())
        );
    }

    /// Rational and floating-point elimination agree on the rank of
    /// small integer matrices.
    #[test]
    fn exact_and_float_ranks_agree(
        (r, c) in (1usize..=12, 1usize..=12),
        data in prop::collection::vec(-5i64..=5, 144),
    ) {
        let exact: Matrix<Rat> = Matrix::from_i64(r, c, &data[..r * c]);
        let float: Matrix<f64> = Matrix::from_i64(r, c, &data[..r * c]);
        prop_assert_eq!(exact.rank(), float.rank());
    }

    /// dim(U + V) + dim(U ∩ V) = dim U + dim V.
    #[test]
    fn subspace_dimensions_are_modular(
        du in 0usize..=3,
        dv in 0usize..=3,
        data in prop::collection::vec(-4i64..=4, 36),
    ) {
        let u = Subspace::from_span(&Matrix::<Rat>::from_i64(6, du, &data[..6 * du]));
        let v = Subspace::from_span(&Matrix::<Rat>::from_i64(6, dv, &data[18..18 + 6 * dv]));
        let meet = u.intersection(&v).unwrap();
        let join = u.sum(&v).unwrap();
        prop_assert_eq!(join.dim() + meet.dim(), u.dim() + v.dim());
    }

    /// The Gram-corrected adjoint of a restricted boundary map
    /// satisfies the defining identity <Mx, y> = <x, M*y> in the inner
    /// products the subspace bases inherit.
    #[test]
    fn restricted_adjoint_satisfies_inner_product_identity(
        h in small_hypergraph(),
        xs in prop::collection::vec(-3i64..=3, 12),
        ys in prop::collection::vec(-3i64..=3, 12),
    ) {
        let c = WeightedComplex::<Rat>::new(&h, &Weight::Trivial).unwrap();
        let top = c.top_degree().unwrap_or(0);
        for n in 1..=top {
            let (dom, cod) = (c.inf(n), c.inf(n - 1));
            if dom.dim() == 0 || cod.dim() == 0 || dom.dim() > xs.len() || cod.dim() > ys.len() {
                continue;
            }
            let op = restrict(&c.boundary(n), &dom, &cod).unwrap();
            let adj = op.adjoint();
            let x: Vec<Rat> = xs[..dom.dim()].iter().map(|&v| rat_int(v)).collect();
            let y: Vec<Rat> = ys[..cod.dim()].iter().map(|&v| rat_int(v)).collect();
            let lhs = inner(&cod.gram(), &op.matrix.mul_vec(&x), &y);
            let rhs = inner(&dom.gram(), &x, &adj.matrix.mul_vec(&y));
            prop_assert_eq!(lhs, rhs);
        }
    }

    /// A vector of the carrier killed by the ambient coboundary is
    /// killed by the adjoint of the restricted boundary too.
    #[test]
    fn ambient_coboundary_kernel_sits_inside_restricted_one(
        h in small_hypergraph(),
        kind in 0u8..4,
        seed in 0u64..1000,
    ) {
        let phi = weight_for(&h, kind, seed);
        let c = WeightedComplex::<Rat>::new(&h, &phi).unwrap();
        let top = c.top_degree().unwrap_or(0);
        for n in 1..=top {
            let (dom, cod) = (c.inf(n), c.inf(n - 1));
            if dom.dim() == 0 || cod.dim() == 0 {
                continue;
            }
            let adj = restricted_adjoint(&c.boundary(n), &dom, &cod).unwrap();
            let killed = kernel(&c.boundary(n).transpose()).intersection(&cod).unwrap();
            for j in 0..killed.dim() {
                let coords = cod.coordinates_of(&killed.basis().column(j)).unwrap();
                let img = adj.matrix.mul_vec(&coords);
                prop_assert!(img.iter().all(|v| v == &rat_int(0)));
            }
        }
    }

    /// An evaluation weight conjugates the boundary maps by the
    /// diagonal simplex-rescaling, so it preserves every rank the
    /// embedded homology is built from, and carries the infimum
    /// subspaces onto their rescaled images. The infimum is *not*
    /// fixed pointwise: for {v4, v5, v1 v4, v1 v5} the degree-1
    /// infimum is the weight-dependent line a*w(v1 v4) + b*w(v1 v5) = 0.
    #[test]
    fn evaluation_weights_conjugate_the_lattice(h in small_hypergraph(), seed in 0u64..1000) {
        let plain = WeightedComplex::<Rat>::new(&h, &Weight::Trivial).unwrap();
        let phi = random_evaluation_weight(&h, seed);
        let weighted = WeightedComplex::<Rat>::new(&h, &phi).unwrap();
        let top = plain.top_degree().unwrap_or(0);
        for n in 0..=top {
            let span = plain.edge_span(n);
            prop_assert_eq!(
                span.intersection(&kernel(&plain.boundary(n))).unwrap().dim(),
                span.intersection(&kernel(&weighted.boundary(n))).unwrap().dim()
            );
            prop_assert_eq!(
                span.intersection(&image(&plain.boundary(n + 1))).unwrap().dim(),
                span.intersection(&image(&weighted.boundary(n + 1))).unwrap().dim()
            );
            prop_assert_eq!(plain.sup(n).dim(), weighted.sup(n).dim());
            prop_assert_eq!(
                plain.inf(n).image_under(&inverse_rescaling(&plain, &phi, n)),
                weighted.inf(n)
            );
        }
    }

    /// s(M^T M) and s(M M^T) agree away from zero.
    #[test]
    fn gram_spectra_agree_up_to_zeros(m in int_matrix(6)) {
        let lhs = spectrum(&m.transpose().mul(&m)).unwrap();
        let rhs = spectrum(&m.mul(&m.transpose())).unwrap();
        prop_assert!(circ_eq(&lhs, &rhs), "{lhs:?} vs {rhs:?}");
    }

    /// The transfer maps between the two Gram eigenspaces at a nonzero
    /// eigenvalue invert each other.
    #[test]
    fn eigen_transfer_round_trips(m in int_matrix(6)) {
        let ab = m.mul(&m.transpose());
        for &(lambda, _) in spectrum(&ab).unwrap().entries() {
            if lambda.abs() < 0.5 {
                continue;
            }
            let t = eigen_transfer(&m, &m.transpose(), lambda).unwrap();
            let round = t.inverse.mul(&t.forward);
            let id: Matrix<f64> = Matrix::identity(round.rows());
            let close = (0..round.rows()).all(|i| {
                (0..round.cols()).all(|j| (round.get(i, j) - id.get(i, j)).abs() < 1e-6)
            });
            prop_assert!(close, "lambda {lambda}: {round:?}");
        }
    }

    /// Quasi-spectrum multiplicities grow with the subspace.
    #[test]
    fn quasi_spectrum_is_monotone(
        m in int_matrix(5),
        data in prop::collection::vec(-4i64..=4, 20),
        small in 0usize..=2,
    ) {
        let op = m.transpose().mul(&m);
        let d = op.rows();
        let big = Subspace::from_span(&Matrix::<f64>::from_i64(d, 4.min(d), &data[..d * 4.min(d)]));
        let inner_cols = small.min(big.dim());
        let sub_basis: Vec<Vec<f64>> = (0..inner_cols).map(|j| big.basis().column(j)).collect();
        let sub = Subspace::from_span(&Matrix::from_columns(d, &sub_basis));
        let lo = quasi_spectrum(&op, &sub).unwrap();
        let hi = quasi_spectrum(&op, &big).unwrap();
        for &(lambda, mult) in lo.entries() {
            let scale = 1.0_f64.max(lambda.abs());
            let found = hi
                .entries()
                .iter()
                .any(|&(l, m2)| (l - lambda).abs() <= CMP_REL_TOL * scale && mult <= m2);
            prop_assert!(found, "{lambda} x{mult} missing from {hi:?}");
        }
    }
}
