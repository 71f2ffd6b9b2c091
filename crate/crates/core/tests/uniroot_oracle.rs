mod common;

use common::{box_contains_f64, companion_roots, random_squarefree, rng};
use lur::numeric::{box_dis, rat, Extended};
use lur::polynomial::UniPoly;
use lur::uniroot::{count_roots_in_box, isolate_all_roots, refine_box};
use num_traits::Signed;

#[test]
fn random_polynomials_match_eigenvalues() {
    let mut r = rng(7);
    for _ in 0..60 {
        let p = random_squarefree(&mut r, 10, 9);
        let set = isolate_all_roots(&p, &rat(1, 64)).unwrap();
        assert_eq!(set.len(), p.deg(), "{p}");
        for z in companion_roots(&p) {
            let hits = set.boxes().iter().filter(|b| box_contains_f64(b, z, 1e-8)).count();
            assert_eq!(hits, 1, "{p}: root {z} in {hits} boxes");
        }
        match set.separation() {
            Extended::Finite(d) => assert!(d.is_positive()),
            Extended::Infinity => assert_eq!(set.len(), 1),
        }
    }
}

#[test]
fn boxes_count_one_and_mirror() {
    let mut r = rng(11);
    for _ in 0..20 {
        let p = random_squarefree(&mut r, 8, 5);
        let set = isolate_all_roots(&p, &rat(1, 16)).unwrap();
        for b in set.boxes() {
            assert_eq!(count_roots_in_box(&p, b), Ok(1));
            if !b.is_real() {
                assert!(set.boxes().contains(&b.conj()), "{p}: no mirror for {b}");
            }
        }
    }
}

#[test]
fn refinement_stays_inside() {
    let p = UniPoly::from_ints(&[-29, -66, 60, 0, 12]);
    let set = isolate_all_roots(&p, &rat(1, 4)).unwrap();
    for b in set.boxes() {
        let fine = refine_box(&p, b, &rat(1, 1 << 20)).unwrap();
        assert!(b.contains_box(&fine));
        assert!(fine.width() <= rat(1, 1 << 20));
        assert_eq!(count_roots_in_box(&p, &fine), Ok(1));
    }
    let fine = set.refine(&rat(1, 1 << 12)).unwrap();
    for (a, b) in fine.boxes().iter().zip(fine.boxes().iter().skip(1)) {
        assert!(box_dis(a, b).is_positive());
    }
}
