//! C ABI over the `tricensus` core.
//!
//! Every fallible call returns a [`TcStatus`]. On failure a message is kept
//! per thread and can be copied out with [`tc_last_error_message`].
//! Triangulations are opaque [`TcTriangulation`] handles owned by the caller
//! and released with [`tc_triangulation_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tricensus::cycles::{circumference_and_hamiltonian, spectrum, CycleError, EnumOptions};
use tricensus::dual::{radius_diameter, DualGraph};
use tricensus::generators::{self, ApexAssignment};
use tricensus::io;
use tricensus::plane_graph::PlanarTriangulation;

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidGraph = 4,
    OutOfRange = 5,
    BudgetExceeded = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

/// Opaque triangulation handle.
pub struct TcTriangulation {
    inner: PlanarTriangulation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn fail(status: TcStatus, msg: impl Into<String>) -> TcStatus {
    set_error(msg);
    status
}

/// Runs `f`, mapping a panic to `Internal`.
fn guard(f: impl FnOnce() -> TcStatus) -> TcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TcStatus::Internal, "panic inside tricensus"),
    }
}

fn cycle_status(e: CycleError) -> TcStatus {
    let s = match e {
        CycleError::BudgetExceeded { .. } => TcStatus::BudgetExceeded,
        _ => TcStatus::Internal,
    };
    fail(s, e.to_string())
}

unsafe fn handle<'a>(h: *const TcTriangulation) -> Option<&'a PlanarTriangulation> {
    h.as_ref().map(|t| &t.inner)
}

unsafe fn store(out: *mut *mut TcTriangulation, g: PlanarTriangulation) -> TcStatus {
    *out = Box::into_raw(Box::new(TcTriangulation { inner: g }));
    TcStatus::Ok
}

/// Copies the last error message of this thread into `buf` (NUL-terminated)
/// and returns its length without the terminator. Returns 0 when there is no
/// message. If `buf` is null or too small nothing is written and the needed
/// length is still returned.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn tc_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        None => 0,
        Some(msg) => {
            let bytes = msg.as_bytes_with_nul();
            if !buf.is_null() && len >= bytes.len() {
                ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, bytes.len());
            }
            bytes.len() - 1
        }
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses the textual rotation format and validates it as a triangulation.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_triangulation_from_rot(text: *const c_char, out: *mut *mut TcTriangulation) -> TcStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(TcStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(TcStatus::InvalidUtf8, "input is not UTF-8");
        };
        let rs = match io::parse_rot(s) {
            Ok(rs) => rs,
            Err(e) => return fail(TcStatus::Parse, e.to_string()),
        };
        match PlanarTriangulation::from_rotation_system(rs) {
            Ok(g) => store(out, g),
            Err(e) => fail(TcStatus::InvalidGraph, e.to_string()),
        }
    })
}

/// Reads graph number `index` of a planar_code stream.
///
/// # Safety
/// `data` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_triangulation_from_planar_code(
    data: *const u8,
    len: usize,
    index: usize,
    out: *mut *mut TcTriangulation,
) -> TcStatus {
    guard(|| {
        if data.is_null() || out.is_null() {
            return fail(TcStatus::NullPointer, "null argument");
        }
        let bytes = std::slice::from_raw_parts(data, len);
        let all = match io::parse_planar_code(bytes) {
            Ok(v) => v,
            Err(e) => return fail(TcStatus::Parse, e.to_string()),
        };
        let Some(rs) = all.into_iter().nth(index) else {
            return fail(TcStatus::OutOfRange, format!("stream has no graph #{index}"));
        };
        match PlanarTriangulation::from_rotation_system(rs) {
            Ok(g) => store(out, g),
            Err(e) => fail(TcStatus::InvalidGraph, e.to_string()),
        }
    })
}

/// Graph families accepted by [`tc_generate`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcFamily {
    /// `param` = n.
    DoubleWheel = 0,
    /// `param` = n.
    FlippedDoubleWheel = 1,
    /// `param` = p, default apex layout.
    GP = 2,
    /// `param` = depth.
    Stacked = 3,
    /// `param` = n, with `seed`.
    Random = 4,
}

/// Generates a family member.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_generate(
    family: TcFamily,
    param: usize,
    seed: u64,
    out: *mut *mut TcTriangulation,
) -> TcStatus {
    guard(|| {
        if out.is_null() {
            return fail(TcStatus::NullPointer, "null argument");
        }
        let g = match family {
            TcFamily::DoubleWheel => generators::double_wheel(param),
            TcFamily::FlippedDoubleWheel => generators::flipped_double_wheel(param).map(|(g, _)| g),
            TcFamily::GP => generators::g_p(param, ApexAssignment::default()),
            TcFamily::Stacked if param > 6 => {
                return fail(TcStatus::OutOfRange, "stacked depth above 6 is not supported");
            }
            TcFamily::Stacked => Ok(generators::stacked(param)),
            TcFamily::Random => generators::random_triangulation(param, seed),
        };
        match g {
            Ok(g) => store(out, g),
            Err(e) => fail(TcStatus::OutOfRange, e.to_string()),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tc_triangulation_free(h: *mut TcTriangulation) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_order(h: *const TcTriangulation) -> usize {
    handle(h).map_or(0, |g| g.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_size(h: *const TcTriangulation) -> usize {
    handle(h).map_or(0, |g| g.size())
}

/// Face count, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_face_count(h: *const TcTriangulation) -> usize {
    handle(h).map_or(0, |g| g.faces().len())
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tc_is_four_connected(h: *const TcTriangulation, out: *mut bool) -> TcStatus {
    guard(|| {
        let (Some(g), false) = (handle(h), out.is_null()) else {
            return fail(TcStatus::NullPointer, "null argument");
        };
        *out = g.is_four_connected();
        TcStatus::Ok
    })
}

/// Number of cycles of length `len`. `budget` caps the partial paths
/// explored; 0 means the library default.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tc_cycle_count(
    h: *const TcTriangulation,
    len: usize,
    budget: u64,
    out: *mut u64,
) -> TcStatus {
    guard(|| {
        let (Some(g), false) = (handle(h), out.is_null()) else {
            return fail(TcStatus::NullPointer, "null argument");
        };
        if len < 3 || len > g.order() {
            return fail(TcStatus::OutOfRange, format!("length {len} outside 3..={}", g.order()));
        }
        let mut opts = EnumOptions {
            min_len: len,
            max_len: Some(len),
            jobs: 1,
            ..EnumOptions::default()
        };
        if budget > 0 {
            opts.budget = budget;
        }
        match spectrum(g, &opts) {
            Ok(s) => {
                *out = s.count(len);
                TcStatus::Ok
            }
            Err(e) => cycle_status(e),
        }
    })
}

/// Circumference and number of hamiltonian cycles (undirected).
///
/// # Safety
/// `h` must be a live handle; `circ` and `ham` writable.
#[no_mangle]
pub unsafe extern "C" fn tc_circumference(
    h: *const TcTriangulation,
    budget: u64,
    circ: *mut usize,
    ham: *mut u64,
) -> TcStatus {
    guard(|| {
        let (Some(g), false, false) = (handle(h), circ.is_null(), ham.is_null()) else {
            return fail(TcStatus::NullPointer, "null argument");
        };
        let mut opts = EnumOptions {
            jobs: 1,
            ..EnumOptions::default()
        };
        if budget > 0 {
            opts.budget = budget;
        }
        match circumference_and_hamiltonian(g, &opts) {
            Ok((c, hc)) => {
                *circ = c;
                *ham = hc;
                TcStatus::Ok
            }
            Err(e) => cycle_status(e),
        }
    })
}

/// Radius and diameter of the dual graph.
///
/// # Safety
/// `h` must be a live handle; `rad` and `diam` writable.
#[no_mangle]
pub unsafe extern "C" fn tc_dual_radius_diameter(
    h: *const TcTriangulation,
    rad: *mut usize,
    diam: *mut usize,
) -> TcStatus {
    guard(|| {
        let (Some(g), false, false) = (handle(h), rad.is_null(), diam.is_null()) else {
            return fail(TcStatus::NullPointer, "null argument");
        };
        let d = match DualGraph::full(g) {
            Ok(d) => d,
            Err(e) => return fail(TcStatus::Internal, e.to_string()),
        };
        match radius_diameter(&d.adjacency()) {
            Ok((r, dm)) => {
                *rad = r;
                *diam = dm;
                TcStatus::Ok
            }
            Err(e) => fail(TcStatus::Internal, e.to_string()),
        }
    })
}

/// Writes the rotation text into `buf` (NUL-terminated). `needed` receives
/// the length without terminator; `BufferTooSmall` is returned when `buf`
/// cannot hold it.
///
/// # Safety
/// `h` must be a live handle, `needed` writable, `buf` null or `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn tc_write_rot(
    h: *const TcTriangulation,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> TcStatus {
    guard(|| {
        let (Some(g), false) = (handle(h), needed.is_null()) else {
            return fail(TcStatus::NullPointer, "null argument");
        };
        let text = io::write_rot(g.rotation_system());
        *needed = text.len();
        if buf.is_null() || len <= text.len() {
            return fail(TcStatus::BufferTooSmall, format!("need {} bytes", text.len() + 1));
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        *buf.add(text.len()) = 0;
        TcStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generate(f: TcFamily, p: usize) -> *mut TcTriangulation {
        let mut h = ptr::null_mut();
        assert_eq!(unsafe { tc_generate(f, p, 0, &mut h) }, TcStatus::Ok);
        h
    }

    fn last_error() -> String {
        let n = unsafe { tc_last_error_message(ptr::null_mut(), 0) };
        let mut buf = vec![0 as c_char; n + 1];
        unsafe { tc_last_error_message(buf.as_mut_ptr(), buf.len()) };
        unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_owned()
    }

    #[test]
    fn octahedron_roundtrip() {
        let h = generate(TcFamily::DoubleWheel, 6);
        unsafe {
            assert_eq!((tc_order(h), tc_size(h), tc_face_count(h)), (6, 12, 8));
            let mut four = false;
            assert_eq!(tc_is_four_connected(h, &mut four), TcStatus::Ok);
            assert!(four);
            let mut c5 = 0;
            assert_eq!(tc_cycle_count(h, 5, 0, &mut c5), TcStatus::Ok);
            assert_eq!(c5, 24);
            let (mut circ, mut ham) = (0, 0);
            assert_eq!(tc_circumference(h, 0, &mut circ, &mut ham), TcStatus::Ok);
            assert_eq!((circ, ham), (6, 16));
            let (mut r, mut d) = (0, 0);
            assert_eq!(tc_dual_radius_diameter(h, &mut r, &mut d), TcStatus::Ok);
            assert_eq!((r, d), (3, 3));

            let mut needed = 0;
            assert_eq!(tc_write_rot(h, ptr::null_mut(), 0, &mut needed), TcStatus::BufferTooSmall);
            let mut buf = vec![0 as c_char; needed + 1];
            assert_eq!(tc_write_rot(h, buf.as_mut_ptr(), buf.len(), &mut needed), TcStatus::Ok);
            let mut h2 = ptr::null_mut();
            assert_eq!(tc_triangulation_from_rot(buf.as_ptr(), &mut h2), TcStatus::Ok);
            assert_eq!(tc_size(h2), 12);
            tc_triangulation_free(h2);
            tc_triangulation_free(h);
        }
    }

    #[test]
    fn errors_are_reported() {
        let mut h = ptr::null_mut();
        let bad = CString::new("4\n0: 1 2\n").unwrap();
        let s = unsafe { tc_triangulation_from_rot(bad.as_ptr(), &mut h) };
        assert!(matches!(s, TcStatus::Parse | TcStatus::InvalidGraph));
        assert!(h.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(unsafe { tc_generate(TcFamily::DoubleWheel, 3, 0, &mut h) }, TcStatus::OutOfRange);
        assert!(last_error().contains("double"), "{}", last_error());
        assert_eq!(unsafe { tc_order(ptr::null()) }, 0);
        let mut c = 0;
        assert_eq!(unsafe { tc_cycle_count(ptr::null(), 3, 0, &mut c) }, TcStatus::NullPointer);

        let g = generate(TcFamily::Stacked, 2);
        assert_eq!(unsafe { tc_cycle_count(g, 20, 10, &mut c) }, TcStatus::BudgetExceeded);
        assert_eq!(unsafe { tc_cycle_count(g, 2, 0, &mut c) }, TcStatus::OutOfRange);
        unsafe { tc_triangulation_free(g) };
    }

    #[test]
    fn planar_code_input() {
        let g = generators::g_p(1, ApexAssignment::default()).unwrap();
        let bytes = io::write_planar_code(&[g.rotation_system(), g.rotation_system()]);
        let mut h = ptr::null_mut();
        unsafe {
            assert_eq!(tc_triangulation_from_planar_code(bytes.as_ptr(), bytes.len(), 1, &mut h), TcStatus::Ok);
            assert_eq!(tc_order(h), 8);
            tc_triangulation_free(h);
            assert_eq!(
                tc_triangulation_from_planar_code(bytes.as_ptr(), bytes.len(), 2, &mut h),
                TcStatus::OutOfRange
            );
        }
    }
}
