use std::collections::BTreeSet;

use super::decomposition::Decomposition;
use super::slice::Slice;
use crate::error::{Error, Result};
use crate::lattice_fan::{iso_class, surface_from_rays, IsoClass, LatticeVector, SurfaceFan};
use crate::linalg::{q, Rational};

/// General fiber of a deformation whose tail slice is a single lattice point.
#[derive(Debug, Clone)]
pub struct GeneralFiber {
    /// Rays in the adapted basis.
    pub surface: SurfaceFan,
    pub iso: IsoClass,
}

fn primitive_at(b: &Rational, height: i64) -> LatticeVector {
    let den = i64::try_from(b.denom()).expect("breakpoint denominator fits");
    let num = i64::try_from(b.numer()).expect("breakpoint numerator fits");
    LatticeVector::new([num, height * den])
}

pub fn general_fiber(slice: &Slice, d: &Decomposition) -> Result<GeneralFiber> {
    let below = slice.negative_rays();
    let tail = match below.as_slice() {
        [(_, v)] if v.0[1] == -1 => v.0[0],
        _ => {
            let rays: Vec<String> = below.iter().map(|(_, v)| format!("({v})")).collect();
            return Err(Error::NontrivialTail(format!(
                "rays below the line: {}",
                rays.join(" ")
            )));
        }
    };
    let ends = |family: &[crate::deformation::Interval]| -> BTreeSet<Rational> {
        family.iter().flat_map(|s| s.finite_endpoints()).collect()
    };
    let mut rays: Vec<LatticeVector> = ends(&d.tilde0)
        .iter()
        .map(|b| primitive_at(b, 1))
        .collect();
    rays.extend(ends(&d.tilde_t).iter().map(|b| primitive_at(&(b + q(tail)), -1)));
    rays.extend(
        (1..=slice.l())
            .filter(|&k| slice.height(k) == 0)
            .map(|k| slice.adapted_ray(k).clone()),
    );
    let surface = surface_from_rays(rays).map_err(|e| Error::FiberInvalid(e.to_string()))?;
    let iso = iso_class(&surface);
    Ok(GeneralFiber { surface, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::deformation::{compute_slice, pi_decomposition, realize};
    use crate::lattice_fan::Weight;

    #[test]
    fn hirzebruch_two_to_product() {
        let s = compute_slice(&catalog::hirzebruch(2), &Weight::new([1, 1])).unwrap();
        let d = realize(&s, &[1, 1, -1, -1], 0).unwrap();
        let f = general_fiber(&s, &d).unwrap();
        let rays: BTreeSet<LatticeVector> = f.surface.ordered_rays().into_iter().collect();
        let expect: BTreeSet<LatticeVector> = [[0, 1], [1, 1], [0, -1], [-1, -1]]
            .map(LatticeVector::new)
            .into();
        assert_eq!(rays, expect);
        assert_eq!(f.iso.cycle, vec![0, 0, 0, 0]);
    }

    #[test]
    fn trivial_fiber_is_original() {
        for r in 2..5 {
            let s = compute_slice(&catalog::hirzebruch(r), &Weight::new([1, 1])).unwrap();
            let d = realize(&s, &[1; 4], 0).unwrap();
            assert_eq!(general_fiber(&s, &d).unwrap().iso.hirzebruch_index(), Some(r as u64));
        }
    }

    #[test]
    fn trivial_fiber_keeps_height_zero_rays() {
        let x = catalog::f1_blown_up_twice();
        let s = compute_slice(&x, &Weight::new([0, 1])).unwrap();
        let d = realize(&s, &[1; 5], 0).unwrap();
        let f = general_fiber(&s, &d).unwrap();
        assert_eq!(f.surface.len(), x.len());
        assert_eq!(f.iso, iso_class(&x));
    }

    #[test]
    fn hirzebruch_five() {
        let s = compute_slice(&catalog::hirzebruch(5), &Weight::new([1, 1])).unwrap();
        let d = pi_decomposition(&s, 2).unwrap();
        assert_eq!(general_fiber(&s, &d).unwrap().iso.hirzebruch_index(), Some(3));
    }

    #[test]
    fn nontrivial_tail() {
        let s = compute_slice(&catalog::hexagon(), &Weight::new([1, 1])).unwrap();
        let d = realize(&s, &vec![1; s.m() + 2], 0).unwrap();
        assert!(matches!(general_fiber(&s, &d), Err(Error::NontrivialTail(_))));
    }
}
