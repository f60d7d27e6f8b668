//! Exhaustive checks of structural invariants on small boxes.

use std::collections::{BTreeMap, BTreeSet};

use schubert::lr::{
    self, count_images, expand_product, inscribes, lr_by_products, lr_coefficient, LRKey,
};
use schubert::shimura::{self, chern_action_nonzero, enumerate_pairs, vz_bidegree, Flavor};
use schubert::skewshape::SkewShape;
use schubert::tableau::{count_lr_fillings, SlideOrder, Tableau};
use schubert::{enumerate_in_rectangle, Partition, Rectangle};

fn rect(a: usize, b: usize) -> Rectangle {
    Rectangle::new(a, b).unwrap()
}

fn all_in(r: Rectangle) -> Vec<Partition> {
    enumerate_in_rectangle(r, None, false)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn conjugate_and_complement_are_involutions() {
    for a in 1..=5 {
        for b in 1..=5 {
            let r = rect(a, b);
            for l in all_in(r) {
                assert_eq!(l.conjugate().conjugate(), l);
                let c = l.complement(r).unwrap();
                assert_eq!(c.complement(r).unwrap(), l);
                assert_eq!(
                    c.conjugate(),
                    l.conjugate().complement(r.transpose()).unwrap()
                );
            }
        }
    }
}

#[test]
fn symmetric_halves() {
    let syms = enumerate_in_rectangle(rect(5, 5), None, true);
    let mut seen = BTreeSet::new();
    for l in &syms {
        let plus = l.plus_part().unwrap();
        let minus = l.minus_part().unwrap();
        assert_eq!(l.bar_closure().unwrap().weight(), 2 * plus.weight());
        assert_eq!(l.check_reduction().unwrap().weight(), 2 * minus.weight());
        assert!(plus.is_strict(), "{l:?}");
        let shifted: Vec<usize> = plus
            .parts()
            .iter()
            .map(|x| x - 1)
            .filter(|&x| x > 0)
            .collect();
        assert_eq!(minus.parts(), &shifted[..]);
        assert!(seen.insert(plus.clone()), "plus part of {l:?} repeats");
        assert_eq!(l.weight(), plus.weight() + minus.weight());
    }
    assert_eq!(syms.len(), 32);
}

#[test]
fn rectangle_enumeration_counts() {
    for a in 1..=5 {
        for b in 1..=5 {
            assert_eq!(all_in(rect(a, b)).len(), binomial(a + b, a));
        }
    }
}

#[test]
fn decompositions_tile_the_skew() {
    let r = rect(4, 4);
    for mu in all_in(r) {
        for lambda in all_in(r).into_iter().filter(|l| mu.contains(l)) {
            let s = SkewShape::new(mu.clone(), lambda.clone()).unwrap();
            let Some(blocks) = s.placed_blocks() else {
                continue;
            };
            let total: usize = blocks.iter().map(|b| b.rect.area()).sum();
            assert_eq!(total, s.size());
            let mut covered = BTreeSet::new();
            for b in &blocks {
                for i in 0..b.rect.rows {
                    for j in 0..b.rect.cols {
                        let cell = (b.row + i, b.col + j);
                        assert!(s.contains_cell(cell));
                        assert!(covered.insert(cell));
                    }
                }
            }
            let chain = s.rectangle_decomposition().unwrap();
            assert_eq!(
                chain.blocks,
                blocks.iter().map(|b| b.rect).collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn compatibility_commutes_with_conjugation() {
    let r = rect(3, 4);
    for mu in all_in(r) {
        for lambda in all_in(r) {
            assert_eq!(
                schubert::is_compatible_pair(&lambda, &mu, r),
                schubert::is_compatible_pair(&lambda.conjugate(), &mu.conjugate(), r.transpose())
            );
        }
    }
}

#[test]
fn reverse_numbering_is_a_bijection() {
    let r = rect(4, 4);
    for mu in all_in(r) {
        for lambda in all_in(r).into_iter().filter(|l| mu.contains(l)) {
            let s = SkewShape::new(mu.clone(), lambda).unwrap();
            let rn: BTreeSet<_> = s.reverse_numbering().into_iter().collect();
            let cells: BTreeSet<_> = s.cells().into_iter().collect();
            assert_eq!(rn.len(), s.size());
            assert_eq!(rn, cells);
        }
    }
}

/// All semistandard fillings of `s` with entries in `1..=max`.
fn fillings(s: &SkewShape, max: usize) -> Vec<Tableau> {
    let cells = s.cells();
    let mut out = Vec::new();
    let mut vals: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        max: usize,
        vals: &mut BTreeMap<(usize, usize), usize>,
        s: &SkewShape,
        out: &mut Vec<Tableau>,
    ) {
        if i == cells.len() {
            let rows: Vec<Vec<usize>> = (1..=s.outer().len())
                .map(|r| {
                    let (a, b) = s.row_span(r);
                    (a + 1..=b).map(|c| vals[&(r, c)]).collect()
                })
                .collect();
            out.push(Tableau::new(s.clone(), rows).unwrap());
            return;
        }
        let (r, c) = cells[i];
        let lo_left = vals.get(&(r, c.wrapping_sub(1))).copied().unwrap_or(1);
        let lo_up = vals
            .get(&(r.wrapping_sub(1), c))
            .map(|v| v + 1)
            .unwrap_or(1);
        for v in lo_left.max(lo_up)..=max {
            vals.insert((r, c), v);
            go(i + 1, cells, max, vals, s, out);
        }
        vals.remove(&(r, c));
    }
    go(0, &cells, max, &mut vals, s, &mut out);
    out
}

#[test]
fn rectification_ignores_slide_order() {
    let r = rect(3, 3);
    let mut n = 0;
    for mu in all_in(r) {
        for lambda in all_in(r).into_iter().filter(|l| mu.contains(l)) {
            let s = SkewShape::new(mu.clone(), lambda).unwrap();
            for t in fillings(&s, 3) {
                let a = t.rectify_with(SlideOrder::TopCornerFirst);
                let b = t.rectify_with(SlideOrder::BottomCornerFirst);
                assert_eq!(a, b, "{t}");
                assert!(a.is_straight() && a.is_semistandard());
                assert_eq!(a.content(), t.content());
                assert_eq!(a, t.rectify());
                n += 1;
            }
        }
    }
    assert!(n > 1000);
}

fn partitions_up_to(n: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    for w in 1..=n {
        out.extend(enumerate_in_rectangle(rect(w, w), Some(w), false));
    }
    out
}

#[test]
fn fillings_match_tableau_products() {
    let shapes = partitions_up_to(6);
    for mu in &shapes {
        for lambda in shapes.iter().filter(|l| mu.contains(l)) {
            let s = SkewShape::new(mu.clone(), lambda.clone()).unwrap();
            for nu in shapes.iter().filter(|n| n.weight() == s.size()) {
                let key = LRKey::new(mu.clone(), lambda.clone(), nu.clone());
                let fill = count_lr_fillings(&s, nu);
                assert_eq!(fill, lr_by_products(&key), "{key}");
                assert_eq!(
                    fill as usize,
                    schubert::tableau::enumerate_lr_fillings(&s, nu).len()
                );
            }
        }
    }
}

#[test]
fn lr_conjugation_symmetry() {
    let r = rect(3, 3);
    for mu in all_in(r) {
        for lambda in all_in(r).into_iter().filter(|l| mu.contains(l)) {
            for nu in enumerate_in_rectangle(r, Some(mu.weight() - lambda.weight()), false) {
                let a = lr_coefficient(&LRKey::new(mu.clone(), lambda.clone(), nu.clone()));
                let b = lr_coefficient(&LRKey::new(
                    mu.conjugate(),
                    lambda.conjugate(),
                    nu.conjugate(),
                ));
                let c = lr_coefficient(&LRKey::new(mu.clone(), nu.clone(), lambda.clone()));
                assert_eq!(a, b);
                assert_eq!(a, c);
                let s = SkewShape::new(mu.clone(), lambda.clone()).unwrap();
                assert_eq!(a, count_images(&nu, &s));
            }
        }
    }
}

fn rect_lists(max_len: usize) -> Vec<Vec<Rectangle>> {
    let singles: Vec<Rectangle> = (1..=3)
        .flat_map(|a| (1..=3).map(move |b| rect(a, b)))
        .collect();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Rectangle>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for l in &frontier {
            for r in &singles {
                let mut m = l.clone();
                m.push(*r);
                next.push(m);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn images_of_rectangle_products() {
    for rects in rect_lists(3) {
        let parts: Vec<Partition> = rects.iter().map(|r| r.as_partition()).collect();
        let sp: usize = rects.iter().map(|r| r.rows).sum();
        let sq: usize = rects.iter().map(|r| r.cols).sum();
        let min_q = rects.iter().map(|r| r.cols).min().unwrap();
        for (nu, k) in expand_product(&parts, None) {
            assert!(k > 0u32.into());
            assert!(nu.len() <= sp, "{rects:?} {nu:?}");
            assert!(nu.get(sp - 1) <= min_q, "{rects:?} {nu:?}");
            if rects.len() >= 2 && nu.get(sp - 1) != 0 {
                assert!(nu.first() < sq, "{rects:?} {nu:?}");
            }
        }
    }
}

#[test]
fn single_rectangle_breaks_the_strict_first_row_bound() {
    let nu = Partition::rectangle(2, 3);
    assert_eq!(lr::multi_lr_rectangles(&nu, &[rect(2, 3)]), 1u32.into());
    assert_eq!(nu.get(1), 3);
    assert_eq!(nu.first(), 3);
}

#[test]
fn inscription_is_monotone() {
    let r = rect(3, 3);
    for mu in all_in(r) {
        for lambda in all_in(r).into_iter().filter(|l| mu.contains(l)) {
            let s = SkewShape::new(mu.clone(), lambda).unwrap();
            if s.size() > 8 {
                continue;
            }
            for nu in partitions_up_to(s.size()) {
                if !inscribes(&nu, &s) {
                    continue;
                }
                for i in 0..nu.len() {
                    let mut parts = nu.parts().to_vec();
                    parts[i] -= 1;
                    if let Ok(smaller) = Partition::new(parts) {
                        assert!(
                            inscribes(&smaller, &s),
                            "{nu:?} inscribes in {s} but {smaller:?} does not"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn chern_action_of_unit_and_antitone() {
    for (amb, flavor) in [
        (rect(2, 3), Flavor::Unitary),
        (rect(3, 3), Flavor::Unitary),
        (rect(3, 3), Flavor::Symplectic),
        (rect(3, 3), Flavor::Orthogonal),
    ] {
        let nus = enumerate_in_rectangle(amb, None, flavor != Flavor::Unitary);
        for pair in enumerate_pairs(amb, flavor, None) {
            assert!(chern_action_nonzero(&Partition::empty(), &pair).unwrap());
            let yes: Vec<&Partition> = nus
                .iter()
                .filter(|n| chern_action_nonzero(n, &pair).unwrap())
                .collect();
            for big in &yes {
                for small in &nus {
                    if big.contains(small) {
                        assert!(
                            chern_action_nonzero(small, &pair).unwrap(),
                            "{pair}: {big:?} acts but {small:?} does not"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn full_side_blocks_are_determined_by_chern_action() {
    let amb = rect(3, 3);
    let nus = all_in(amb);
    let pairs = enumerate_pairs(amb, Flavor::Unitary, None);
    let signature = |p: &shimura::CompatiblePair| -> Vec<bool> {
        nus.iter()
            .map(|n| chern_action_nonzero(n, p).unwrap())
            .collect()
    };
    let mut checked = 0;
    for pair in &pairs {
        let blocks = &pair.chain().blocks;
        if blocks.len() != 1 || (blocks[0].rows != 3 && blocks[0].cols != 3) {
            continue;
        }
        let sig = signature(pair);
        let same: Vec<_> = pairs
            .iter()
            .filter(|q| vz_bidegree(q) == vz_bidegree(pair) && signature(q) == sig)
            .collect();
        assert_eq!(same.len(), 1, "{pair}");
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn indistinguishable_pairs_exist() {
    let amb = rect(3, 3);
    let a = shimura::CompatiblePair::unitary("2,2".parse().unwrap(), "3,2,1".parse().unwrap(), amb)
        .unwrap();
    let b =
        shimura::CompatiblePair::unitary("2,1,1".parse().unwrap(), "3,2,1".parse().unwrap(), amb)
            .unwrap();
    assert_eq!(vz_bidegree(&a), (4, 3));
    assert_eq!(vz_bidegree(&b), (4, 3));
    for nu in all_in(amb) {
        assert_eq!(
            chern_action_nonzero(&nu, &a).unwrap(),
            chern_action_nonzero(&nu, &b).unwrap()
        );
    }
}

#[test]
fn hodge_skeleton_is_symmetric() {
    for (amb, flavor) in [
        (rect(2, 2), Flavor::Unitary),
        (rect(2, 3), Flavor::Unitary),
        (rect(3, 3), Flavor::Unitary),
        (rect(3, 3), Flavor::Symplectic),
        (rect(3, 3), Flavor::Orthogonal),
    ] {
        let sk = shimura::hodge_skeleton(amb, flavor);
        for (&(i, j), &n) in &sk {
            assert_eq!(sk.get(&(j, i)), Some(&n), "{amb} {flavor}: ({i},{j})");
        }
        for pair in enumerate_pairs(amb, flavor, None) {
            let conj = pair.conjugate_pair();
            let (i, j) = vz_bidegree(&pair);
            assert_eq!(vz_bidegree(&conj), (j, i));
            assert_eq!(conj.conjugate_pair(), pair);
            assert_eq!(
                shimura::vz_components(&pair).len(),
                shimura::vz_components(&conj).len()
            );
        }
    }
}

#[test]
fn low_degree_pairs_have_special_structure() {
    for (p, q) in [(1, 4), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4)] {
        let amb = rect(p, q);
        let bound = shimura::low_degree_bound(amb);
        for pair in enumerate_pairs(amb, Flavor::Unitary, None) {
            let (i, j) = vz_bidegree(&pair);
            if i + j < bound {
                assert_ne!(
                    shimura::low_degree_structure(&pair),
                    shimura::Structure::Other,
                    "{pair}"
                );
            }
        }
    }
}

#[test]
fn arthur_cover_suggestions_recheck() {
    for (p, q) in [(1, 3), (1, 5), (2, 2), (2, 3), (3, 3), (2, 4)] {
        let amb = rect(p, q);
        let bound = shimura::low_degree_bound(amb);
        let cover = shimura::arthur_cover(amb, bound - 1).unwrap();
        let expected = enumerate_pairs(amb, Flavor::Unitary, None)
            .into_iter()
            .filter(|x| {
                let (i, j) = vz_bidegree(x);
                i + j < bound
            })
            .count();
        assert_eq!(cover.len(), expected);
        assert!(shimura::arthur_cover(amb, bound).is_err());
    }
}

#[test]
fn ostar_identities_are_exact() {
    for p in 2..=8usize {
        let r_deg = |r: usize| r * p - r * (r + 1) / 2;
        let s_deg = |s: usize| (p - 1) * (p - 2) / 2 + s;
        assert_eq!(r_deg(p), s_deg(p - 1));
        assert_eq!(r_deg(p - 1), s_deg(p - 1));
        assert_eq!(r_deg(p - 2), s_deg(p - 2));
    }
}
