//! Multi-threaded driver for the fill search.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use cornermosaic_core::fillsearch::{assemble, compliant_shapes, shape_filter, ShapeReport};
use cornermosaic_core::{Error, FillRules, GrowthSeed, OccupancyMask, SearchReport};

/// Same result as `reproduce_classification`, with shapes spread over
/// `threads` workers. The report does not depend on the thread count.
pub fn parallel_classification(
    max_cells: usize,
    rules: FillRules,
    masks: &[OccupancyMask],
    seed: GrowthSeed,
    threads: usize,
) -> Result<SearchReport, Error> {
    let shapes = compliant_shapes(max_cells, &shape_filter(&rules, masks), seed)?;
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(shapes.len()));
    thread::scope(|s| {
        for _ in 0..threads.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(p) = shapes.get(i) else { break };
                let r = ShapeReport::for_shape(p, &rules);
                results.lock().unwrap().push(r);
            });
        }
    });
    let reports = results.into_inner().unwrap().into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(max_cells, rules, reports))
}

pub fn default_threads() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}
