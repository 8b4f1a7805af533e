//! Planar diagram codes traced from mosaics, and the Kauffman bracket.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::mosaic::Mosaic;
use crate::poly::LaurentPoly;
use crate::tile::TileId;

/// Largest diagram `bracket` will expand (the state sum has `2^c` terms).
pub const BRACKET_CROSSING_LIMIT: usize = 16;

/// One crossing. `arcs` lists the four incident arc labels counterclockwise,
/// starting at an end of the under strand: `arcs[0]`/`arcs[2]` are the under
/// strand and `arcs[1]`/`arcs[3]` the over strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Crossing {
    pub arcs: [u32; 4],
}

impl Crossing {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Crossing { arcs: [a, b, c, d] }
    }

    /// The same crossing with the layers exchanged.
    pub fn mirrored(self) -> Self {
        let [a, b, c, d] = self.arcs;
        Crossing { arcs: [b, c, d, a] }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    /// Closed components that pass through no crossing.
    pub free_loops: usize,
}

/// Link components of a diagram. Components `0..linked` own arcs; the free
/// loops are numbered `linked..linked + free_loops`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub arc_component: BTreeMap<u32, usize>,
    pub linked: usize,
    pub free_loops: usize,
}

impl Components {
    pub fn total(&self) -> usize {
        self.linked + self.free_loops
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        PlanarDiagram { crossings, free_loops }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Every arc label must occur exactly twice.
    pub fn is_well_formed(&self) -> bool {
        let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
        for x in &self.crossings {
            for &a in &x.arcs {
                *seen.entry(a).or_default() += 1;
            }
        }
        seen.values().all(|&n| n == 2)
    }

    pub fn mirrored(&self) -> Self {
        PlanarDiagram {
            crossings: self.crossings.iter().map(|x| x.mirrored()).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Sorted distinct labels and a label -> dense index map.
    fn label_index(&self) -> (Vec<u32>, BTreeMap<u32, usize>) {
        let labels: BTreeSet<u32> =
            self.crossings.iter().flat_map(|x| x.arcs.iter().copied()).collect();
        let labels: Vec<u32> = labels.into_iter().collect();
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        (labels, index)
    }

    /// The bracket `sum_S A^(a-b) d^(loops-1)`, `d = -A^2 - A^-2`, normalised
    /// so a single loop is `1`. The empty diagram also evaluates to `1`.
    pub fn bracket(&self) -> Result<LaurentPoly, Error> {
        let c = self.crossings.len();
        if c > BRACKET_CROSSING_LIMIT {
            return Err(Error::CrossingBudget { crossings: c, limit: BRACKET_CROSSING_LIMIT });
        }
        if c == 0 && self.free_loops == 0 {
            return Ok(LaurentPoly::one());
        }
        let (labels, index) = self.label_index();
        let slots: Vec<[usize; 4]> =
            self.crossings.iter().map(|x| x.arcs.map(|a| index[&a])).collect();

        // (a - b, loops) -> number of states
        let mut tally: BTreeMap<(i32, usize), i64> = BTreeMap::new();
        for state in 0u32..(1 << c) {
            let mut dsu = Dsu::new(labels.len());
            let mut a_minus_b = 0i32;
            for (i, s) in slots.iter().enumerate() {
                if state & (1 << i) == 0 {
                    dsu.union(s[0], s[1]);
                    dsu.union(s[2], s[3]);
                    a_minus_b += 1;
                } else {
                    dsu.union(s[0], s[3]);
                    dsu.union(s[1], s[2]);
                    a_minus_b -= 1;
                }
            }
            let loops = (0..labels.len()).filter(|&i| dsu.find(i) == i).count() + self.free_loops;
            *tally.entry((a_minus_b, loops)).or_default() += 1;
        }

        let max_loops = tally.keys().map(|k| k.1).max().unwrap_or(1);
        let delta = LaurentPoly::delta();
        let mut delta_pow = vec![LaurentPoly::one()];
        for k in 1..max_loops {
            let next = &delta_pow[k - 1] * &delta;
            delta_pow.push(next);
        }
        let mut out = LaurentPoly::zero();
        for ((exp, loops), n) in tally {
            out = &out + &delta_pow[loops - 1].shifted(n, exp);
        }
        Ok(out)
    }

    pub fn components(&self) -> Components {
        let (labels, index) = self.label_index();
        let mut dsu = Dsu::new(labels.len());
        for x in &self.crossings {
            let s = x.arcs.map(|a| index[&a]);
            dsu.union(s[0], s[2]);
            dsu.union(s[1], s[3]);
        }
        let mut root_to_comp = BTreeMap::new();
        let mut arc_component = BTreeMap::new();
        for (i, &l) in labels.iter().enumerate() {
            let root = dsu.find(i);
            let next = root_to_comp.len();
            let comp = *root_to_comp.entry(root).or_insert(next);
            arc_component.insert(l, comp);
        }
        Components { arc_component, linked: root_to_comp.len(), free_loops: self.free_loops }
    }

    /// Groups link components that are joined, directly or through others,
    /// by a shared crossing. Blocks are sorted; free loops are singletons.
    pub fn split_components(&self) -> Vec<Vec<usize>> {
        let comps = self.components();
        let mut dsu = Dsu::new(comps.total());
        for x in &self.crossings {
            dsu.union(comps.arc_component[&x.arcs[0]], comps.arc_component[&x.arcs[1]]);
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..comps.total() {
            let root = dsu.find(c);
            blocks.entry(root).or_default().push(c);
        }
        blocks.into_values().collect()
    }

    /// The diagram of the sublink made of the given components: every
    /// crossing involving a dropped component is smoothed away by joining
    /// the arcs the kept strand passes through.
    pub fn sub_diagram(&self, keep: &[usize]) -> PlanarDiagram {
        let comps = self.components();
        let (labels, index) = self.label_index();
        let kept = |a: &u32| keep.contains(&comps.arc_component[a]);
        let mut dsu = Dsu::new(labels.len());
        let mut crossings = Vec::new();
        for x in &self.crossings {
            if kept(&x.arcs[0]) && kept(&x.arcs[1]) {
                crossings.push(*x);
                continue;
            }
            for (p, q) in [(0, 2), (1, 3)] {
                if kept(&x.arcs[p]) {
                    dsu.union(index[&x.arcs[p]], index[&x.arcs[q]]);
                }
            }
        }
        let mut touched = BTreeSet::new();
        for x in &mut crossings {
            x.arcs = x.arcs.map(|a| {
                let root = dsu.find(index[&a]);
                touched.insert(root);
                labels[root]
            });
        }
        let mut lonely = BTreeSet::new();
        for (i, l) in labels.iter().enumerate() {
            let root = dsu.find(i);
            if kept(l) && !touched.contains(&root) {
                lonely.insert(root);
            }
        }
        let free_loops = lonely.len() + keep.iter().filter(|&&c| c >= comps.linked).count();
        PlanarDiagram { crossings, free_loops }
    }

    /// Writhe of every relative orientation: component 0 keeps a fixed
    /// orientation and each subset of the other linked components is
    /// reversed in turn (bit `k - 1` reverses component `k`).
    pub fn orientation_writhes(&self) -> Vec<i32> {
        let comps = self.components();
        if comps.linked == 0 {
            return vec![0];
        }
        let mut occurrences: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (xi, x) in self.crossings.iter().enumerate() {
            for (pos, &a) in x.arcs.iter().enumerate() {
                occurrences.entry(a).or_default().push((xi, pos));
            }
        }
        // incoming[x][pos]: the oriented strand arrives at crossing x through pos
        let mut incoming = vec![[false; 4]; self.crossings.len()];
        let mut done = vec![false; comps.linked];
        for (&start, &comp) in &comps.arc_component {
            if done[comp] {
                continue;
            }
            done[comp] = true;
            let mut leave = occurrences[&start][0];
            let mut label = start;
            loop {
                let occ = &occurrences[&label];
                let arrive = if occ[0] == leave { occ[1] } else { occ[0] };
                incoming[arrive.0][arrive.1] = true;
                leave = (arrive.0, (arrive.1 + 2) % 4);
                label = self.crossings[leave.0].arcs[leave.1];
                if label == start && leave == occurrences[&start][0] {
                    break;
                }
            }
        }
        let signed: Vec<(i32, usize, usize)> = self
            .crossings
            .iter()
            .enumerate()
            .map(|(xi, x)| {
                let sign = if incoming[xi][0] == incoming[xi][3] { 1 } else { -1 };
                (sign, comps.arc_component[&x.arcs[0]], comps.arc_component[&x.arcs[1]])
            })
            .collect();
        (0u32..1 << (comps.linked - 1))
            .map(|flips| {
                let flipped = |c: usize| c > 0 && flips & (1 << (c - 1)) != 0;
                signed
                    .iter()
                    .map(|&(s, u, o)| if flipped(u) != flipped(o) { -s } else { s })
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.crossings {
            let [a, b, c, d] = x.arcs;
            writeln!(f, "X {a} {b} {c} {d} under")?;
        }
        writeln!(f, "loops {}", self.free_loops)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    Plain { strand: usize, side: usize },
    Slot { crossing: usize, slot: u8 },
}

/// Walks the strands of a valid mosaic into a planar diagram. Arcs are
/// labelled `1..` in walk order.
pub fn trace(m: &Mosaic) -> Result<PlanarDiagram, Error> {
    let report = m.validate();
    if !report.valid {
        return Err(Error::InvalidMosaic { violations: report.violations.len() });
    }
    let sys = m.system();
    let width = 2 * m.cols() + 1;
    let mut ends: Vec<Vec<End>> = vec![Vec::new(); (2 * m.rows() + 1) * width];
    let mut plain: Vec<[usize; 2]> = Vec::new();
    let mut crossings: Vec<(TileId, [usize; 4])> = Vec::new();

    for (pos, t) in m.iter() {
        let loc = |slot: u8| {
            let (r, c) = m.location(pos, sys.port(slot));
            r * width + c
        };
        if t.is_crossing() {
            let x = crossings.len();
            let locs = [loc(0), loc(1), loc(2), loc(3)];
            for (slot, &l) in locs.iter().enumerate() {
                ends[l].push(End::Slot { crossing: x, slot: slot as u8 });
            }
            crossings.push((t, locs));
        } else {
            for &(a, b, _) in t.slot_strands() {
                let s = plain.len();
                let locs = [loc(a), loc(b)];
                ends[locs[0]].push(End::Plain { strand: s, side: 0 });
                ends[locs[1]].push(End::Plain { strand: s, side: 1 });
                plain.push(locs);
            }
        }
    }

    let other_end = |at: usize, from: End| -> End {
        let here = &ends[at];
        if here[0] == from {
            here[1]
        } else {
            here[0]
        }
    };

    let mut visited = vec![false; plain.len()];
    let mut labels = vec![[0u32; 4]; crossings.len()];
    let mut next_label = 1;
    for x in 0..crossings.len() {
        for slot in 0..4u8 {
            if labels[x][slot as usize] != 0 {
                continue;
            }
            let mut at = crossings[x].1[slot as usize];
            let mut from = End::Slot { crossing: x, slot };
            loop {
                match other_end(at, from) {
                    End::Slot { crossing, slot: s2 } => {
                        labels[x][slot as usize] = next_label;
                        labels[crossing][s2 as usize] = next_label;
                        next_label += 1;
                        break;
                    }
                    End::Plain { strand, side } => {
                        visited[strand] = true;
                        at = plain[strand][1 - side];
                        from = End::Plain { strand, side: 1 - side };
                    }
                }
            }
        }
    }

    let mut free_loops = 0;
    for s in 0..plain.len() {
        if visited[s] {
            continue;
        }
        free_loops += 1;
        let (mut strand, mut side) = (s, 1);
        loop {
            visited[strand] = true;
            let at = plain[strand][side];
            match other_end(at, End::Plain { strand, side }) {
                End::Plain { strand: s2, side: e2 } => {
                    if visited[s2] {
                        break;
                    }
                    strand = s2;
                    side = 1 - e2;
                }
                End::Slot { .. } => unreachable!("free loop touches a crossing"),
            }
        }
    }

    // counterclockwise slot order is 0, 3, 2, 1; start at an under end
    let crossings = crossings
        .iter()
        .zip(&labels)
        .map(|((t, _), l)| {
            let order: [usize; 4] = if *t == TileId::T9 { [3, 2, 1, 0] } else { [0, 3, 2, 1] };
            Crossing { arcs: order.map(|s| l[s]) }
        })
        .collect();
    Ok(PlanarDiagram { crossings, free_loops })
}
