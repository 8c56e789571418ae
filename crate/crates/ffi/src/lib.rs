//! C interface to the orthoseq constructions and verifiers.
//!
//! Collections are returned as opaque `OrthoseqCollection` handles owned by
//! the caller and released with `orthoseq_collection_free`. Every fallible
//! call returns an `OrthoseqStatus`; the message of the most recent failure
//! on the calling thread is available from `orthoseq_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orthoseq::constructions::{
    construct_l_orthogonal_de_bruijn, construct_l_orthogonal_kautz, construct_orthogonal_balanced_de_bruijn,
    construct_orthogonal_balanced_kautz, ConstructionResult,
};
use orthoseq::verify::{is_b_balanced, is_de_bruijn, is_kautz_word, is_l_orthogonal};
use orthoseq::{Error, Symbol};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthoseqStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Parameters outside the supported range (or a guard was hit).
    InvalidParameter = 2,
    /// Index past the end of a collection.
    OutOfRange = 3,
    /// Caller buffer too small; the required size was written back.
    BufferTooSmall = 4,
    /// Construction or certification failed internally.
    Internal = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

/// A certified collection of circular sequences.
pub struct OrthoseqCollection {
    result: ConstructionResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> OrthoseqStatus {
    match e {
        Error::CertificationFailed(_)
        | Error::InvalidCircuit(_)
        | Error::MultipleCycles(_)
        | Error::NotConnected
        | Error::DegreeMismatch { .. }
        | Error::IncompleteWiring { .. }
        | Error::InsufficientDegree { .. }
        | Error::TooManyForbidden { .. }
        | Error::NoSuchArc(_)
        | Error::SearchExhausted(_)
        | Error::Disconnected
        | Error::NotCoprime(..)
        | Error::EmptyGraph
        | Error::NoWordLabels => OrthoseqStatus::Internal,
        _ => OrthoseqStatus::InvalidParameter,
    }
}

fn guarded(f: impl FnOnce() -> Result<(), OrthoseqStatus>) -> OrthoseqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrthoseqStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic in orthoseq");
            OrthoseqStatus::Panic
        }
    }
}

fn build(
    out: *mut *mut OrthoseqCollection,
    make: impl FnOnce() -> orthoseq::Result<ConstructionResult>,
) -> OrthoseqStatus {
    guarded(|| {
        if out.is_null() {
            set_error("output handle pointer is null");
            return Err(OrthoseqStatus::NullPointer);
        }
        // SAFETY: checked non-null; the caller provides a writable slot.
        unsafe { *out = ptr::null_mut() };
        let result = make().map_err(|e| {
            set_error(e.to_string());
            status_of(&e)
        })?;
        let handle = Box::into_raw(Box::new(OrthoseqCollection { result }));
        // SAFETY: as above.
        unsafe { *out = handle };
        Ok(())
    })
}

/// Build `ell * K` pairwise ell-orthogonal (sigma,k)-de Bruijn sequences.
///
/// # Safety
/// `out` must be null or point to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_l_orthogonal_de_bruijn(
    sigma: usize,
    k: usize,
    ell: usize,
    out: *mut *mut OrthoseqCollection,
) -> OrthoseqStatus {
    build(out, || construct_l_orthogonal_de_bruijn(sigma, k, ell))
}

/// Build ell-orthogonal (sigma,k)-Kautz sequences.
///
/// # Safety
/// As for `orthoseq_l_orthogonal_de_bruijn`.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_l_orthogonal_kautz(
    sigma: usize,
    k: usize,
    ell: usize,
    out: *mut *mut OrthoseqCollection,
) -> OrthoseqStatus {
    build(out, || construct_l_orthogonal_kautz(sigma, k, ell))
}

/// Build `c` orthogonal b-balanced de Bruijn sequences of order `k`.
///
/// # Safety
/// As for `orthoseq_l_orthogonal_de_bruijn`.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_balanced_de_bruijn(
    c: usize,
    b: usize,
    k: usize,
    out: *mut *mut OrthoseqCollection,
) -> OrthoseqStatus {
    build(out, || construct_orthogonal_balanced_de_bruijn(c, b, k))
}

/// Build `c` orthogonal b-balanced Kautz sequences of order `k`.
///
/// # Safety
/// As for `orthoseq_l_orthogonal_de_bruijn`.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_balanced_kautz(
    c: usize,
    b: usize,
    k: usize,
    out: *mut *mut OrthoseqCollection,
) -> OrthoseqStatus {
    build(out, || construct_orthogonal_balanced_kautz(c, b, k))
}

/// Release a collection. Null is ignored.
///
/// # Safety
/// `handle` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_collection_free(handle: *mut OrthoseqCollection) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

unsafe fn collection<'a>(handle: *const OrthoseqCollection) -> Result<&'a OrthoseqCollection, OrthoseqStatus> {
    if handle.is_null() {
        set_error("collection handle is null");
        return Err(OrthoseqStatus::NullPointer);
    }
    Ok(unsafe { &*handle })
}

/// Number of sequences; 0 for a null handle.
///
/// # Safety
/// `handle` must be null or a live collection.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_collection_len(handle: *const OrthoseqCollection) -> usize {
    unsafe { collection(handle) }.map_or(0, |c| c.result.len())
}

/// Alphabet size used by the collection; 0 for a null handle.
///
/// # Safety
/// `handle` must be null or a live collection.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_collection_sigma(handle: *const OrthoseqCollection) -> usize {
    unsafe { collection(handle) }.map_or(0, |c| c.result.params.sigma)
}

/// Whether the attached certificate holds (1) or not (0); 0 for null.
///
/// # Safety
/// `handle` must be null or a live collection.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_collection_certified(handle: *const OrthoseqCollection) -> i32 {
    unsafe { collection(handle) }.map_or(0, |c| i32::from(c.result.certificate.holds))
}

/// Copy sequence `index` as symbol indices into `buf`.
///
/// The sequence length is always written to `*len`; pass a null `buf` to
/// query it. Returns `BufferTooSmall` when `cap` is insufficient.
///
/// # Safety
/// `handle` must be a live collection, `len` writable, and `buf` null or
/// valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_collection_word(
    handle: *const OrthoseqCollection,
    index: usize,
    buf: *mut u16,
    cap: usize,
    len: *mut usize,
) -> OrthoseqStatus {
    guarded(|| {
        let c = unsafe { collection(handle) }?;
        if len.is_null() {
            set_error("length pointer is null");
            return Err(OrthoseqStatus::NullPointer);
        }
        let word = c.result.words.get(index).ok_or_else(|| {
            set_error(format!("index {index} out of range (have {})", c.result.len()));
            OrthoseqStatus::OutOfRange
        })?;
        unsafe { *len = word.len() };
        if buf.is_null() {
            return Ok(());
        }
        if cap < word.len() {
            set_error(format!("buffer holds {cap} symbols, need {}", word.len()));
            return Err(OrthoseqStatus::BufferTooSmall);
        }
        unsafe { ptr::copy_nonoverlapping(word.as_ptr(), buf, word.len()) };
        Ok(())
    })
}

unsafe fn word_slice<'a>(word: *const u16, len: usize) -> Result<&'a [Symbol], OrthoseqStatus> {
    if word.is_null() {
        if len == 0 {
            return Ok(&[]);
        }
        set_error("word pointer is null");
        return Err(OrthoseqStatus::NullPointer);
    }
    Ok(unsafe { std::slice::from_raw_parts(word, len) })
}

fn write_flag(holds: *mut i32, value: bool) -> Result<(), OrthoseqStatus> {
    if holds.is_null() {
        set_error("result pointer is null");
        return Err(OrthoseqStatus::NullPointer);
    }
    // SAFETY: checked non-null.
    unsafe { *holds = i32::from(value) };
    Ok(())
}

/// Check that a circular word is a (sigma,k)-de Bruijn sequence.
///
/// # Safety
/// `word` must be valid for `len` reads; `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_is_de_bruijn(
    word: *const u16,
    len: usize,
    sigma: usize,
    k: usize,
    holds: *mut i32,
) -> OrthoseqStatus {
    guarded(|| write_flag(holds, is_de_bruijn(unsafe { word_slice(word, len) }?, sigma, k).holds))
}

/// Check that every k-window occurs exactly `b` times.
///
/// # Safety
/// As for `orthoseq_is_de_bruijn`.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_is_b_balanced(
    word: *const u16,
    len: usize,
    sigma: usize,
    k: usize,
    b: usize,
    holds: *mut i32,
) -> OrthoseqStatus {
    guarded(|| {
        write_flag(
            holds,
            is_b_balanced(unsafe { word_slice(word, len) }?, sigma, k, b).holds,
        )
    })
}

/// Check that a circular word is a (sigma,k)-Kautz sequence.
///
/// # Safety
/// As for `orthoseq_is_de_bruijn`.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_is_kautz(
    word: *const u16,
    len: usize,
    sigma: usize,
    k: usize,
    holds: *mut i32,
) -> OrthoseqStatus {
    guarded(|| write_flag(holds, is_kautz_word(unsafe { word_slice(word, len) }?, sigma, k).holds))
}

/// Check that no (k+1)-window occurs more than `ell` times across `count`
/// circular words.
///
/// # Safety
/// `words` and `lens` must be valid for `count` reads and each `words[i]`
/// valid for `lens[i]` reads; `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orthoseq_is_l_orthogonal(
    words: *const *const u16,
    lens: *const usize,
    count: usize,
    k: usize,
    ell: usize,
    holds: *mut i32,
) -> OrthoseqStatus {
    guarded(|| {
        if count > 0 && (words.is_null() || lens.is_null()) {
            set_error("word array is null");
            return Err(OrthoseqStatus::NullPointer);
        }
        let mut owned = Vec::with_capacity(count);
        for i in 0..count {
            let (w, n) = unsafe { (*words.add(i), *lens.add(i)) };
            owned.push(unsafe { word_slice(w, n) }?.to_vec());
        }
        write_flag(holds, is_l_orthogonal(&owned, k, ell).holds)
    })
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn orthoseq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
