use std::f64::consts::PI;

use super::{Certificate, Claim, Eigenvalue};
use crate::error::{Error, Result};
use crate::matgraph::Graph;
use crate::scalars::{ExactMatrix, ExactScalar};
use crate::spectra::q_exact;
use crate::strongprops::{direct_sum_verdict, verify, Property, VerifyOptions};
use crate::symmatrix::SymMatrix;

/// `C + C^T` where `C` is the cyclic shift `c_{i,i+1} = 1` with the corner
/// entry `c_{n,1} = -1`, so that `C^n = -I`.
///
/// Its eigenvalues are `2cos((2j-1)π/n)`, which come in equal pairs apart
/// from `-2` for odd `n`. The certificate claims `q = ⌈n/2⌉`, the SMP, and
/// the SSP exactly for `n <= 4`; larger cycles carry the failure witness
/// `C^2 + (C^2)^T`.
pub fn flipped_cycle(n: usize) -> Result<Certificate> {
    if n < 3 {
        return Err(Error::Domain(format!("flipped cycle needs n >= 3, got {n}")));
    }
    let mut shift = ExactMatrix::zeros(n, n);
    for i in 0..n - 1 {
        shift[(i, i + 1)] = ExactScalar::one();
    }
    shift[(n - 1, 0)] = ExactScalar::from_int(-1);
    let matrix = shift.add(&shift.transpose())?;

    let mut values: Vec<f64> = (1..=n)
        .map(|j| 2.0 * ((2 * j - 1) as f64 * PI / n as f64).cos())
        .collect();
    values.sort_by(f64::total_cmp);
    let mut m: Vec<usize> = Vec::new();
    for (k, v) in values.iter().enumerate() {
        if k > 0 && (v - values[k - 1]).abs() < 1e-9 {
            *m.last_mut().expect("nonempty") += 1;
        } else {
            m.push(1);
        }
    }

    let ssp_witness = if n >= 5 {
        let sq = shift.mul(&shift)?;
        let x = sq.add(&sq.transpose())?;
        Some((0..n).map(|i| x.row(i).to_vec()).collect())
    } else {
        None
    };
    let claims = vec![
        Claim::Q { value: n.div_ceil(2) },
        Claim::Property { property: Property::Smp, holds: true, shift: None, witness: None },
        Claim::Property { property: Property::Ssp, holds: n <= 4, shift: None, witness: ssp_witness },
        Claim::SpectrumApprox { values, tol: 1e-10 },
        Claim::MultiplicityList { m },
    ];
    Ok(Certificate {
        id: format!("flipped-cycle-{n}"),
        graph: Graph::cycle(n),
        matrix,
        claims,
        provenance: format!("flipped-cycle matrix C + C^T on the {n}-cycle"),
    })
}

/// Diagonal matrix with pairwise distinct diagonal `values`, on the
/// edgeless graph.
pub fn diag_distinct(values: &[ExactScalar]) -> Result<Certificate> {
    for (i, v) in values.iter().enumerate() {
        if let Some(j) = values[..i].iter().position(|w| w == v) {
            return Err(Error::Distinctness(format!(
                "entries {} and {} are both {v}; a diagonal matrix with a repeated eigenvalue lacks the SSP",
                j + 1,
                i + 1
            )));
        }
    }
    let n = values.len();
    let mut matrix = ExactMatrix::zeros(n, n);
    for (i, v) in values.iter().enumerate() {
        matrix[(i, i)] = v.clone();
    }
    matrix.radicand()?;
    let list: Vec<String> = values.iter().map(ToString::to_string).collect();
    Ok(Certificate {
        id: format!("diag({})", list.join(",")),
        graph: Graph::empty(n),
        matrix,
        claims: vec![
            Claim::Property { property: Property::Ssp, holds: true, shift: None, witness: None },
            Claim::Q { value: n },
            Claim::Spectrum {
                eigenvalues: values
                    .iter()
                    .map(|v| Eigenvalue { value: v.clone(), multiplicity: 1 })
                    .collect(),
            },
        ],
        provenance: "diagonal matrix with distinct eigenvalues".into(),
    })
}

/// Block-diagonal certificate on the disjoint union.
///
/// The `q` claim is recomputed for the sum. SSP and SMP claims held by both
/// blocks are kept only when the block-sum verdict and a direct
/// verification of the sum both confirm them, which fails exactly when the
/// spectra meet. Exact spectra are merged when both blocks carry one.
pub fn direct_sum(c1: &Certificate, c2: &Certificate) -> Result<Certificate> {
    let matrix = c1.matrix.direct_sum(&c2.matrix)?;
    let graph = c1.graph.disjoint_union(&c2.graph);
    let mut claims = vec![Claim::Q { value: q_exact(&matrix)? }];

    let (a1, a2) = (c1.sym(), c2.sym());
    let sum = SymMatrix::Exact(matrix.clone());
    let opts = VerifyOptions::default();
    for property in [Property::Ssp, Property::Smp] {
        if c1.claims_property(property) != Some(true) || c2.claims_property(property) != Some(true) {
            continue;
        }
        let r1 = verify(property, &a1, &c1.graph, &opts)?;
        let r2 = verify(property, &a2, &c2.graph, &opts)?;
        if !(r1.verdict && r2.verdict) {
            continue;
        }
        let combined = direct_sum_verdict(&a1, &r1, &a2, &r2)?;
        let direct = verify(property, &sum, &graph, &opts)?;
        if combined.verdict != direct.verdict {
            return Err(Error::Numeric(format!(
                "{property} of the block sum disagrees with direct verification"
            )));
        }
        if combined.verdict {
            claims.push(Claim::Property { property, holds: true, shift: None, witness: None });
        }
    }

    let spectrum = |c: &Certificate| {
        c.claims.iter().find_map(|claim| match claim {
            Claim::Spectrum { eigenvalues } => Some(eigenvalues.clone()),
            _ => None,
        })
    };
    if let (Some(s1), Some(mut merged)) = (spectrum(c2), spectrum(c1)) {
        for e in s1 {
            match merged.iter_mut().find(|f| f.value == e.value) {
                Some(f) => f.multiplicity += e.multiplicity,
                None => merged.push(e),
            }
        }
        claims.push(Claim::Spectrum { eigenvalues: merged });
    }

    Ok(Certificate {
        id: format!("{}(+){}", c1.id, c2.id),
        graph,
        matrix,
        claims,
        provenance: format!("block-diagonal sum of `{}` and `{}`", c1.id, c2.id),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cycles() {
        assert!(matches!(flipped_cycle(2), Err(Error::Domain(_))));
        let c4 = flipped_cycle(4).unwrap();
        c4.verify().unwrap();
        assert_eq!(c4.q(), Some(2));
        let Claim::SpectrumApprox { values, .. } = &c4.claims[3] else { panic!() };
        let r = 2f64.sqrt();
        for (v, w) in values.iter().zip([-r, -r, r, r]) {
            assert!((v - w).abs() < 1e-12);
        }
        let c7 = flipped_cycle(7).unwrap();
        assert_eq!(c7.q(), Some(4));
        let Claim::MultiplicityList { m } = &c7.claims[4] else { panic!() };
        assert_eq!(m, &vec![1, 2, 2, 2]);
        let Claim::SpectrumApprox { values, .. } = &c7.claims[3] else { panic!() };
        assert!((values[0] + 2.0).abs() < 1e-12);
    }

    #[test]
    fn five_cycle_has_smp_without_ssp() {
        let c = flipped_cycle(5).unwrap();
        c.verify().unwrap();
        assert_eq!(c.claims_property(Property::Ssp), Some(false));
        assert_eq!(c.claims_property(Property::Smp), Some(true));
    }

    #[test]
    fn diagonal_certificates() {
        let one = diag_distinct(&[ExactScalar::one()]).unwrap();
        one.verify().unwrap();
        let four: Vec<ExactScalar> = (0..4).map(ExactScalar::from_int).collect();
        diag_distinct(&four).unwrap().verify().unwrap();
        let twice = [ExactScalar::one(), ExactScalar::one()];
        assert!(matches!(diag_distinct(&twice), Err(Error::Distinctness(_))));
    }
}
