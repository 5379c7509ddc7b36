use std::alloc::{GlobalAlloc, Layout, System};
use std::cell::Cell;
use std::sync::atomic::{AtomicUsize, Ordering};

use edist::dac::{combine, combine_with, Band, CombineScratch, EdgeRule, Region, SpMatrix, PAR_PAIRS};

struct Counting;

static ALLOCATIONS: AtomicUsize = AtomicUsize::new(0);

thread_local! {
    static TRACKING: Cell<bool> = const { Cell::new(false) };
}

unsafe impl GlobalAlloc for Counting {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        if TRACKING.with(Cell::get) {
            ALLOCATIONS.fetch_add(1, Ordering::Relaxed);
        }
        System.alloc(layout)
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout)
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        if TRACKING.with(Cell::get) {
            ALLOCATIONS.fetch_add(1, Ordering::Relaxed);
        }
        System.realloc(ptr, layout, new_size)
    }
}

#[global_allocator]
static GLOBAL: Counting = Counting;

fn allocations_during(f: impl FnOnce()) -> usize {
    let before = ALLOCATIONS.load(Ordering::Relaxed);
    TRACKING.with(|t| t.set(true));
    f();
    TRACKING.with(|t| t.set(false));
    ALLOCATIONS.load(Ordering::Relaxed) - before
}

fn halves(a: &[u8], b: &[u8], band: Band, vertical: bool) -> (SpMatrix, SpMatrix) {
    let rule = EdgeRule::new(a, b);
    let (n, m) = (a.len(), b.len());
    let (r1, r2) = if vertical {
        (Region::new(0, n / 2, 0, m, band), Region::new(n / 2, n, 0, m, band))
    } else {
        (Region::new(0, n, 0, m / 2, band), Region::new(0, n, m / 2, m, band))
    };
    (
        SpMatrix::by_dynamic_programming(&rule, r1),
        SpMatrix::by_dynamic_programming(&rule, r2),
    )
}

#[test]
fn preallocated_buffers_are_enough() {
    let a = b"the quick brown fox jumps over";
    let b = b"a quick brown dog jumped over it";
    for (band, vertical) in [(Band::unbounded(a.len(), b.len()), true), (Band::stripe(5), false)] {
        let (d1, d2) = halves(a, b, band, vertical);
        let expected = combine(&d1, &d2).unwrap();
        let (inputs, outputs) = (d1.inputs().len() + d2.inputs().len(), d1.outputs().len() + d2.outputs().len());
        assert!(d1.inputs().len() * d2.outputs().len() < PAR_PAIRS);
        let seam = a.len().max(b.len()) + 1;
        let mut scratch = CombineScratch::with_capacity(inputs, outputs, seam);
        let mut out = SpMatrix::with_capacity(*expected.region(), inputs, outputs);

        let count = allocations_during(|| combine_with(&d1, &d2, &mut scratch, &mut out).unwrap());
        assert_eq!(count, 0, "{band:?}");
        assert_eq!(out, expected);
    }
}

#[test]
fn warm_buffers_are_reused() {
    let a = b"abracadabra alakazam";
    let b = b"abrakadabra alakazaam";
    let (d1, d2) = halves(a, b, Band::stripe(4), true);
    let mut scratch = CombineScratch::new();
    let mut out = SpMatrix::unsolved(Region::new(0, 0, 0, 0, Band::stripe(4)));
    combine_with(&d1, &d2, &mut scratch, &mut out).unwrap();
    let first = out.clone();

    let (e1, e2) = halves(&a[..16], &b[..17], Band::stripe(4), true);
    let count = allocations_during(|| {
        combine_with(&d1, &d2, &mut scratch, &mut out).unwrap();
        combine_with(&e1, &e2, &mut scratch, &mut out).unwrap();
    });
    assert_eq!(count, 0);
    assert_eq!(out, combine(&e1, &e2).unwrap());
    assert_ne!(out, first);
}
