//! C ABI for `matchwork`.
//!
//! Objects cross the boundary as opaque handles ([`MwMatching`],
//! [`MwWitness`], [`MwTwinSet`]) that the caller releases with the matching
//! `*_free` function. Every fallible call returns an [`MwStatus`]; on
//! failure a description is available from [`mw_last_error_message`].
//! Panics never unwind into C: they are caught and reported as
//! [`MwStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use matchwork::patterns::{es_witness, largest_shape, EsParams, EsWitness};
use matchwork::random::{sample_uniform, sample_via_permutation, Seed};
use matchwork::twins::{block_twins, BlockTwinParams, MatchingStrategy, TwinSet};
use matchwork::{Edge, Error, Matching, Relation, Shape};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MwStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed input: bad word, invalid edges, bad parameters.
    InvalidInput = 2,
    /// Well-formed input violating a precondition or size guard.
    ContractViolation = 3,
    /// The library panicked; this is a bug.
    Panic = 4,
    /// The output buffer is smaller than required.
    BufferTooSmall = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MwRelation {
    Alignment = 0,
    Nesting = 1,
    Crossing = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MwShape {
    Line = 0,
    Stack = 1,
    Wave = 2,
}

impl From<Shape> for MwShape {
    fn from(s: Shape) -> Self {
        match s {
            Shape::Line => MwShape::Line,
            Shape::Stack => MwShape::Stack,
            Shape::Wave => MwShape::Wave,
        }
    }
}

impl From<MwShape> for Shape {
    fn from(s: MwShape) -> Self {
        match s {
            MwShape::Line => Shape::Line,
            MwShape::Stack => Shape::Stack,
            MwShape::Wave => Shape::Wave,
        }
    }
}

/// An ordered matching.
pub struct MwMatching(Matching);

/// A homogeneous sub-matching of some host.
pub struct MwWitness(EsWitness);

/// r-twins of some host.
pub struct MwTwinSet(TwinSet);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(MwStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = if e.is_input_error() {
            MwStatus::InvalidInput
        } else {
            MwStatus::ContractViolation
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(MwStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MwStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MwStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    // SAFETY: the caller guarantees `p` is null or a live handle
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

fn out<T>(dst: *mut *mut T, value: T) -> Result<(), Fail> {
    if dst.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: checked non-null; the caller provides writable storage
    unsafe { *dst = Box::into_raw(Box::new(value)) };
    Ok(())
}

fn copy_to<T: Copy>(src: &[T], dst: *mut T, capacity: usize) -> Result<(), Fail> {
    if src.len() > capacity {
        return Err(Fail(
            MwStatus::BufferTooSmall,
            format!("need room for {} elements, have {capacity}", src.len()),
        ));
    }
    if src.is_empty() {
        return Ok(());
    }
    if dst.is_null() {
        return Err(null("output buffer"));
    }
    // SAFETY: `dst` holds at least `capacity >= src.len()` elements
    unsafe { ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len()) };
    Ok(())
}

/// Message describing the last failure on this thread, or "" if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a double-occurrence word (`"ABAB"` or `"A1 B1 A1 B1"`).
///
/// # Safety
/// `word` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_matching_parse(
    word: *const c_char,
    out: *mut *mut MwMatching,
) -> MwStatus {
    guard(|| {
        if word.is_null() {
            return Err(null("word"));
        }
        // SAFETY: non-null and nul-terminated per contract
        let text = unsafe { CStr::from_ptr(word) }
            .to_str()
            .map_err(|_| Fail(MwStatus::InvalidInput, "word is not UTF-8".into()))?;
        self::out(out, MwMatching(matchwork::parse_word(text)?))
    })
}

/// Builds a matching from `n_edges` endpoint pairs stored flat in `pairs`.
///
/// # Safety
/// `pairs` must hold `2 * n_edges` values (may be null when `n_edges == 0`).
#[no_mangle]
pub unsafe extern "C" fn mw_matching_from_edges(
    pairs: *const u32,
    n_edges: usize,
    out: *mut *mut MwMatching,
) -> MwStatus {
    guard(|| {
        let flat: &[u32] = if n_edges == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            // SAFETY: caller guarantees 2 * n_edges readable values
            unsafe { std::slice::from_raw_parts(pairs, 2 * n_edges) }
        };
        let edges = flat
            .chunks_exact(2)
            .map(|c| Edge::new(c[0], c[1]))
            .collect::<Result<Vec<_>, _>>()?;
        self::out(out, MwMatching(Matching::new(edges)?))
    })
}

/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mw_matching_free(m: *mut MwMatching) {
    if !m.is_null() {
        // SAFETY: created by Box::into_raw in this crate
        drop(unsafe { Box::from_raw(m) });
    }
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mw_matching_size(m: *const MwMatching) -> usize {
    // SAFETY: per contract
    unsafe { m.as_ref() }.map_or(0, |m| m.0.len())
}

/// Writes the edges as `left, right` pairs into `out` (room for
/// `capacity_edges` edges, i.e. `2 * capacity_edges` values).
///
/// # Safety
/// `m` must be a live handle; `out` must hold `2 * capacity_edges` values.
#[no_mangle]
pub unsafe extern "C" fn mw_matching_edges(
    m: *const MwMatching,
    out: *mut u32,
    capacity_edges: usize,
) -> MwStatus {
    guard(|| {
        let m = unsafe { deref(m, "matching") }?;
        let flat: Vec<u32> = m.0.edges().iter().flat_map(|e| [e.left, e.right]).collect();
        copy_to(&flat, out, 2 * capacity_edges)
    })
}

/// Word form of the matching; release with [`mw_string_free`].
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_matching_to_word(
    m: *const MwMatching,
    out: *mut *mut c_char,
) -> MwStatus {
    guard(|| {
        let m = unsafe { deref(m, "matching") }?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let s = CString::new(m.0.to_word()).expect("words contain no nul");
        // SAFETY: checked non-null
        unsafe { *out = s.into_raw() };
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mw_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in this crate
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Relation of the edges `{a1, b1}` and `{a2, b2}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_classify_pair(
    a1: u32,
    b1: u32,
    a2: u32,
    b2: u32,
    out: *mut MwRelation,
) -> MwStatus {
    guard(|| {
        let r = matchwork::classify_pair(Edge::new(a1, b1)?, Edge::new(a2, b2)?)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let r = match r {
            Relation::Alignment => MwRelation::Alignment,
            Relation::Nesting => MwRelation::Nesting,
            Relation::Crossing => MwRelation::Crossing,
        };
        // SAFETY: checked non-null
        unsafe { *out = r };
        Ok(())
    })
}

/// Largest line, stack or wave of `m`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_largest(
    m: *const MwMatching,
    shape: MwShape,
    out: *mut *mut MwWitness,
) -> MwStatus {
    guard(|| {
        let m = unsafe { deref(m, "matching") }?;
        self::out(out, MwWitness(largest_shape(&m.0, shape.into())))
    })
}

/// A line larger than `l`, a stack larger than `s` or a wave larger than
/// `w`; needs at least `l·s·w + 1` edges.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_es_witness(
    m: *const MwMatching,
    l: u64,
    s: u64,
    w: u64,
    out: *mut *mut MwWitness,
) -> MwStatus {
    guard(|| {
        let m = unsafe { deref(m, "matching") }?;
        let wit = es_witness(&m.0, EsParams::new(l, s, w)?)?;
        self::out(out, MwWitness(wit))
    })
}

/// # Safety
/// `w` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mw_witness_kind(w: *const MwWitness) -> MwShape {
    // SAFETY: per contract
    unsafe { w.as_ref() }.map_or(MwShape::Line, |w| w.0.kind.into())
}

/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mw_witness_size(w: *const MwWitness) -> usize {
    // SAFETY: per contract
    unsafe { w.as_ref() }.map_or(0, |w| w.0.size())
}

/// Indices of the witness edges in the host's edge list (ascending).
///
/// # Safety
/// `w` must be a live handle; `out` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn mw_witness_indices(
    w: *const MwWitness,
    out: *mut usize,
    capacity: usize,
) -> MwStatus {
    guard(|| {
        let w = unsafe { deref(w, "witness") }?;
        copy_to(&w.0.embedding, out, capacity)
    })
}

/// # Safety
/// `w` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mw_witness_free(w: *mut MwWitness) {
    if !w.is_null() {
        // SAFETY: created by Box::into_raw in this crate
        drop(unsafe { Box::from_raw(w) });
    }
}

/// Uniform random matching of size `n` (online scheme) from `seed`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_sample_uniform(
    n: usize,
    seed: u64,
    out: *mut *mut MwMatching,
) -> MwStatus {
    guard(|| self::out(out, MwMatching(sample_uniform(n, &mut Seed(seed).rng()))))
}

/// Uniform random matching of size `n` by pairing a shuffled `1..=2n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_sample_via_permutation(
    n: usize,
    seed: u64,
    out: *mut *mut MwMatching,
) -> MwStatus {
    guard(|| {
        self::out(
            out,
            MwMatching(sample_via_permutation(n, &mut Seed(seed).rng())),
        )
    })
}

/// r-twins from the block construction with default block size.
/// `exact_matching` selects maximum instead of greedy auxiliary matching.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_block_twins(
    m: *const MwMatching,
    r: usize,
    exact_matching: bool,
    out: *mut *mut MwTwinSet,
) -> MwStatus {
    guard(|| {
        let m = unsafe { deref(m, "matching") }?;
        let strategy = if exact_matching {
            MatchingStrategy::Exact
        } else {
            MatchingStrategy::Greedy
        };
        let p = BlockTwinParams::default_for(m.0.len(), r)?.with_strategy(strategy);
        self::out(out, MwTwinSet(block_twins(&m.0, &p)?))
    })
}

/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mw_twins_r(t: *const MwTwinSet) -> usize {
    // SAFETY: per contract
    unsafe { t.as_ref() }.map_or(0, |t| t.0.r)
}

/// Edges per sub-matching.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mw_twins_size(t: *const MwTwinSet) -> usize {
    // SAFETY: per contract
    unsafe { t.as_ref() }.map_or(0, |t| t.0.size())
}

/// Host edge indices of sub-matching `h` (ascending).
///
/// # Safety
/// `t` must be a live handle; `out` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn mw_twins_sub(
    t: *const MwTwinSet,
    h: usize,
    out: *mut usize,
    capacity: usize,
) -> MwStatus {
    guard(|| {
        let t = unsafe { deref(t, "twin set") }?;
        let sub = t.0.subs.get(h).ok_or_else(|| {
            Fail::from(Error::IndexOutOfRange {
                index: h,
                len: t.0.r,
            })
        })?;
        copy_to(sub, out, capacity)
    })
}

/// # Safety
/// `t` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mw_twins_free(t: *mut MwTwinSet) {
    if !t.is_null() {
        // SAFETY: created by Box::into_raw in this crate
        drop(unsafe { Box::from_raw(t) });
    }
}
