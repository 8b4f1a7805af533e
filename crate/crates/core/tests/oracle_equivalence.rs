mod oracles;

use std::collections::BTreeSet;

use cornermosaic_core::fillsearch::{enumerate_fills, satisfies_rules, shape_filter};
use cornermosaic_core::generate::random_edge_mosaic;
use cornermosaic_core::polyomino::{canonicalize, compliant, grow_enumerate, is_corner_connected, Cell};
use cornermosaic_core::transform::{all_caps, convert, find_caps, rotate_to_checkerboard};
use cornermosaic_core::{trace, FillRules, GrowthSeed, Mosaic, MosaicSystem, Polyomino, TileId};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_grid(rng: &mut StdRng, system: MosaicSystem) -> Mosaic {
    let rows = rng.gen_range(1..5);
    let cols = rng.gen_range(1..5);
    let cells = (0..rows * cols)
        .map(|_| if rng.gen_bool(0.4) { TileId::T0 } else { TileId::new(rng.gen_range(0..11)).unwrap() })
        .collect();
    Mosaic::new(system, rows, cols, cells).unwrap()
}

#[test]
fn validator_agrees_with_endpoint_counting() {
    let mut rng = StdRng::seed_from_u64(1);
    for system in [MosaicSystem::Edge, MosaicSystem::Corner] {
        let mut valid = 0;
        for _ in 0..1000 {
            let m = random_grid(&mut rng, system);
            assert_eq!(m.is_valid(), oracles::endpoint_valid(&m), "{m:?}");
            valid += m.is_valid() as usize;
        }
        assert!(valid > 20 && valid < 980, "{system}: {valid} valid grids is an unbalanced sample");
    }
    for _ in 0..300 {
        let m = random_edge_mosaic(&mut rng, 4, 4, 0.5, 0.5);
        assert!(oracles::endpoint_valid(&m));
        let c = rotate_to_checkerboard(&m).unwrap();
        assert!(c.is_valid() && oracles::endpoint_valid(&c));
    }
}

pub fn fixtures() -> Vec<Mosaic> {
    use MosaicSystem::*;
    let grids: [(MosaicSystem, &[&[u8]]); 7] = [
        (Corner, &[&[6, 9, 5], &[5, 9, 6]]),
        (Corner, &[&[6, 9, 5], &[10, 0, 10], &[5, 8, 6]]),
        (Corner, &[&[6, 9, 5], &[10, 0, 10], &[5, 9, 6]]),
        (Corner, &[&[3, 1]]),
        (Edge, &[&[0, 2, 1, 0], &[2, 9, 7, 1], &[3, 7, 9, 4], &[0, 3, 4, 0]]),
        (Edge, &[&[2, 1], &[3, 4]]),
        (Edge, &[&[2, 5, 1], &[6, 0, 6], &[3, 5, 4]]),
    ];
    grids.iter().map(|(s, g)| Mosaic::from_indices(*s, g).unwrap()).collect()
}

#[test]
fn bracket_agrees_with_mosaic_state_sum() {
    let mut corpus = fixtures();
    let converted: Vec<Mosaic> =
        corpus.iter().filter(|m| m.system() == MosaicSystem::Edge).map(|m| convert(m).unwrap().0).collect();
    corpus.extend(converted);
    let mut rng = StdRng::seed_from_u64(2);
    while corpus.len() < 80 {
        let m = random_edge_mosaic(&mut rng, 4, 5, 0.45, 0.6);
        if m.cells().iter().filter(|t| t.is_crossing()).count() <= 10 {
            corpus.push(m);
        }
    }
    for m in &corpus {
        let ours: Vec<(i32, i64)> = trace(m).unwrap().bracket().unwrap().terms().collect();
        let theirs: Vec<(i32, i64)> = oracles::state_sum_bracket(m).into_iter().collect();
        assert_eq!(ours, theirs, "{m:?}");
    }
}

#[test]
fn cap_selection_is_a_maximum_matching() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..400 {
        let rows = rng.gen_range(2..6);
        let cols = rng.gen_range(2..6);
        let m = random_edge_mosaic(&mut rng, rows, cols, 0.35, 0.3);
        let candidates = all_caps(&m);
        let chosen = find_caps(&m).unwrap();
        let pairs: Vec<_> = candidates.iter().map(|c| c.cells).collect();
        assert_eq!(chosen.len(), oracles::max_disjoint(&pairs));
        let mut used = BTreeSet::new();
        for cap in &chosen {
            assert!(candidates.contains(cap));
            assert!(used.insert(cap.cells.0) && used.insert(cap.cells.1));
        }
    }
}

const FIXED_POLYPLETS: [usize; 8] = [1, 4, 20, 110, 638, 3832, 23592, 147941];

fn has_l_triomino(cells: &[(i32, i32)]) -> bool {
    let set: BTreeSet<_> = cells.iter().copied().collect();
    let corners: BTreeSet<(i32, i32)> =
        cells.iter().flat_map(|&(r, c)| [(r - 1, c - 1), (r - 1, c), (r, c - 1), (r, c)]).collect();
    corners.into_iter().any(|(r, c)| {
        [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)].iter().filter(|p| set.contains(p)).count() >= 3
    })
}

#[test]
fn growth_matches_redelmeier_enumeration() {
    for n in 1..=8 {
        let fixed = oracles::fixed_polyplets(n);
        assert_eq!(fixed.len(), FIXED_POLYPLETS[n - 1], "fixed polyplets of size {n}");
        if n < 3 {
            continue;
        }
        let one_sided: BTreeSet<Polyomino> = fixed.iter().map(|s| canonicalize(s).unwrap()).collect();
        let exhaustive: BTreeSet<Polyomino> = grow_enumerate(n, GrowthSeed::Exhaustive).unwrap().into_iter().collect();
        assert_eq!(exhaustive, one_sided, "size {n}");
        let with_l: BTreeSet<Polyomino> = one_sided.into_iter().filter(|p| has_l_triomino(p.cells())).collect();
        let seeded: BTreeSet<Polyomino> = grow_enumerate(n, GrowthSeed::LTriomino).unwrap().into_iter().collect();
        assert_eq!(seeded, with_l, "size {n}");
        if n == 4 {
            assert_eq!(seeded.len(), 11);
        }
    }
}

#[test]
fn every_placement_canonicalizes_alike() {
    for n in 1..=6 {
        for shape in oracles::fixed_polyplets(n) {
            let canon = canonicalize(&shape).unwrap();
            assert_eq!(canonicalize(canon.cells()).unwrap(), canon);
            let mut cur = shape.clone();
            for _ in 0..4 {
                for (dr, dc) in [(0, 0), (3, -2), (-5, 7)] {
                    let moved: Vec<Cell> = cur.iter().map(|&(r, c)| (r + dr, c + dc)).collect();
                    assert_eq!(canonicalize(&moved).unwrap(), canon);
                }
                cur = cur.iter().map(|&(r, c)| (c, -r)).collect();
            }
        }
    }
}

#[test]
fn connectivity_agrees_with_union_find() {
    let mut rng = StdRng::seed_from_u64(4);
    let mut connected = 0;
    for _ in 0..10_000 {
        let k = rng.gen_range(0..9);
        let cells: Vec<Cell> = (0..k).map(|_| (rng.gen_range(0..5), rng.gen_range(0..5))).collect();
        let ours = is_corner_connected(&cells);
        assert_eq!(ours, oracles::connected_uf(&cells), "{cells:?}");
        connected += ours as usize;
    }
    assert!(connected > 1000 && connected < 9000);
}

fn placed(p: &Polyomino) -> (usize, usize, Vec<(usize, usize)>) {
    let (rows, cols) = p.dims();
    (rows, cols, p.cells().iter().map(|&(r, c)| (r as usize, c as usize)).collect())
}

fn assert_pruning_is_exact(p: &Polyomino, rules: &FillRules) {
    let (rows, cols, cells) = placed(p);
    let naive = oracles::naive_fills(rows, cols, &cells, |m| satisfies_rules(m, rules));
    let pruned: Vec<Vec<u8>> =
        enumerate_fills(p, rules).iter().map(|m| m.cells().iter().map(|t| t.index()).collect()).collect();
    assert!(pruned.windows(2).all(|w| w[0] < w[1]), "fills out of order for\n{p}");
    assert_eq!(pruned.into_iter().collect::<BTreeSet<_>>(), naive, "shape\n{p}");
}

#[test]
fn pruned_fills_equal_naive_enumeration() {
    for rules in [FillRules::strict(), FillRules::mandatory()] {
        let filter = shape_filter(&rules, &oracles::forbidden_masks());
        let mut checked = 0;
        for n in 3..=6 {
            for p in grow_enumerate(n, GrowthSeed::LTriomino).unwrap() {
                if compliant(&p, &filter) {
                    assert_pruning_is_exact(&p, &rules);
                    checked += 1;
                }
            }
        }
        assert!(checked >= 1);
    }
    for n in 1..=4 {
        for shape in oracles::fixed_polyplets(n).iter().map(|s| canonicalize(s).unwrap()).collect::<BTreeSet<_>>() {
            assert_pruning_is_exact(&shape, &FillRules::none());
        }
    }
}
