//! Closed-form connection matrices for the six Gauss-case bases
//! `(phi_01, X)`, as residues at `z = 0` and `z = 1`. These were derived by
//! hand and serve as the reference the reduction engine is checked against.

use super::FuchsianSystem;
use crate::cohomology::{GaussForm, PairTag};
use crate::exactalg::{int, Rat};

pub fn catalog_matrix(tag: PairTag, a: &Rat, b: &Rat, c: &Rat) -> FuchsianSystem {
    let o = || int(0);
    let (a0, a1) = match tag {
        PairTag::InfZero => (
            [[o(), o()], [c - a, -c]],
            [[c - a - b, b - c], [o(), o()]],
        ),
        PairTag::OneInvZ => (
            [[o(), o()], [-a, -c]],
            [[o(), b.clone()], [o(), c - a - b]],
        ),
        PairTag::OneInvZTilde => (
            [[o(), b.clone()], [o(), int(1) - c]],
            [[o(), o()], [-a, c - a - b - int(1)]],
        ),
        PairTag::OneInf => (
            [[o(), o()], [a.clone(), -c]],
            [[-a, c - b], [-a, c - b]],
        ),
        PairTag::InvZInf => (
            [[o(), o()], [o(), -c]],
            [[-(a * b) / c, -(b * (b - c)) / c], [a * (a - c) / c, (b - c) * (a - c) / c]],
        ),
        // The z = 0 residue's lower-right entry is -c: the variant with
        // -(c - 1) breaks det A = ab/(z(z-1)) and the reduction to Gauss'
        // equation, while -c is what the reduction engine produces.
        PairTag::ZeroInvZ => (
            [[o(), o()], [c - a, -c]],
            [[-b, b.clone()], [a - c, c - a]],
        ),
    };
    let to_vec = |m: [[Rat; 2]; 2]| m.into_iter().map(|r| r.into_iter().collect()).collect();
    FuchsianSystem {
        size: 2,
        singular_points: vec![int(0), int(1)],
        residues: vec![to_vec(a0), to_vec(a1)],
        basis_labels: vec![GaussForm::ZeroOne.label().into(), tag.second().label().into()],
    }
}
