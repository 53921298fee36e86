use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use conn2k_ffi::*;

fn last_error() -> String {
    let p = conn2k_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn path3() -> *mut Conn2kGraph {
    let g = conn2k_graph_new(3);
    unsafe {
        assert_eq!(conn2k_graph_add_edge(g, 0, 1, 1), Conn2kStatus::Ok);
        assert_eq!(conn2k_graph_add_edge(g, 1, 2, 1), Conn2kStatus::Ok);
    }
    g
}

fn edges(r: *const Conn2kResult) -> Vec<(usize, usize, u64)> {
    let n = unsafe { conn2k_result_edge_count(r) };
    (0..n)
        .map(|i| {
            let (mut u, mut v, mut c) = (0, 0, 0);
            assert_eq!(unsafe { conn2k_result_edge(r, i, &mut u, &mut v, &mut c) }, Conn2kStatus::Ok);
            (u, v, c)
        })
        .collect()
}

#[test]
fn augments_path_through_handles() {
    let g = path3();
    for algo in [Conn2kAlgo::Fast, Conn2kAlgo::Naive] {
        let mut r = ptr::null_mut();
        let st = unsafe { conn2k_augment(g, 2, algo, Conn2kAssertLevel::Full, &mut r) };
        assert_eq!(st, Conn2kStatus::Ok);
        assert_eq!(unsafe { conn2k_result_total(r) }, 4);
        let added = edges(r);
        assert_eq!(added.iter().map(|e| e.2).sum::<u64>(), 4);
        assert!(added.iter().all(|&(u, v, _)| u < v && v < 3));

        let out = unsafe { conn2k_result_graph(r) };
        let mut ok = false;
        assert_eq!(unsafe { conn2k_check(out, 2, &mut ok) }, Conn2kStatus::Ok);
        assert!(ok);
        unsafe {
            conn2k_graph_free(out);
            conn2k_result_free(r);
        }
    }
    let mut ok = true;
    assert_eq!(unsafe { conn2k_check(g, 2, &mut ok) }, Conn2kStatus::Ok);
    assert!(!ok);
    unsafe { conn2k_graph_free(g) };
}

#[test]
fn parses_instance_text() {
    let text = CString::new("# path\np caug 3 2\ne 1 2 1\ne 2 3 4\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { conn2k_graph_parse(text.as_ptr(), &mut g) }, Conn2kStatus::Ok);
    unsafe {
        assert_eq!(conn2k_graph_vertex_count(g), 3);
        assert_eq!(conn2k_graph_capacity(g, 1, 2), 4);
        assert_eq!(conn2k_graph_capacity(g, 0, 2), 0);
        assert_eq!(conn2k_graph_capacity(g, 0, 9), 0);
        conn2k_graph_free(g);
    }
}

#[test]
fn parse_error_reports_line() {
    let text = CString::new("p caug 2 1\ne 2 1 1\n").unwrap();
    let mut g = conn2k_graph_new(1);
    let st = unsafe { conn2k_graph_parse(text.as_ptr(), &mut g) };
    assert_eq!(st, Conn2kStatus::InvalidInput);
    assert!(g.is_null());
    assert!(last_error().contains("line 2"), "{}", last_error());
}

#[test]
fn errors_and_null_handles() {
    let g = conn2k_graph_new(2);
    unsafe {
        assert_eq!(conn2k_graph_add_edge(g, 0, 0, 1), Conn2kStatus::InvalidInput);
        assert!(last_error().contains("loop"));
        assert_eq!(conn2k_graph_add_edge(g, 0, 5, 1), Conn2kStatus::InvalidInput);
        assert_eq!(conn2k_graph_add_edge(g, 0, 1, 1), Conn2kStatus::Ok);
        assert!(conn2k_last_error().is_null());

        let mut r = ptr::null_mut();
        assert_eq!(
            conn2k_augment(g, 2, Conn2kAlgo::Fast, Conn2kAssertLevel::Cheap, &mut r),
            Conn2kStatus::InvalidInput
        );
        assert!(r.is_null());
        let p = path3();
        assert_eq!(conn2k_augment(p, 2, Conn2kAlgo::Fast, Conn2kAssertLevel::Cheap, &mut r), Conn2kStatus::Ok);
        conn2k_graph_free(p);
        let (mut u, mut v, mut c) = (0, 0, 0);
        let n = conn2k_result_edge_count(r);
        assert_eq!(conn2k_result_edge(r, n, &mut u, &mut v, &mut c), Conn2kStatus::OutOfRange);
        assert_eq!(conn2k_result_edge(r, 0, ptr::null_mut(), &mut v, &mut c), Conn2kStatus::NullPointer);
        conn2k_result_free(r);

        assert_eq!(
            conn2k_augment(g, 2, Conn2kAlgo::Fast, Conn2kAssertLevel::Off, ptr::null_mut()),
            Conn2kStatus::NullPointer
        );
        let mut ok = false;
        assert_eq!(conn2k_check(ptr::null(), 2, &mut ok), Conn2kStatus::NullPointer);
        assert_eq!(conn2k_graph_vertex_count(ptr::null()), 0);
        assert_eq!(conn2k_result_total(ptr::null()), 0);
        assert!(conn2k_result_graph(ptr::null()).is_null());
        conn2k_graph_free(ptr::null_mut());
        conn2k_result_free(ptr::null_mut());
        conn2k_graph_free(g);
    }
}

#[test]
fn k_below_two_is_rejected() {
    let g = path3();
    let mut r = ptr::null_mut();
    let st = unsafe { conn2k_augment(g, 1, Conn2kAlgo::Fast, Conn2kAssertLevel::Off, &mut r) };
    assert_eq!(st, Conn2kStatus::InvalidInput);
    assert!(r.is_null());
    unsafe { conn2k_graph_free(g) };
}

#[test]
fn header_declares_the_api_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/conn2k.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "conn2k_graph_new",
        "conn2k_graph_parse",
        "conn2k_graph_add_edge",
        "conn2k_graph_free",
        "conn2k_check",
        "conn2k_augment",
        "conn2k_result_edge",
        "conn2k_result_free",
        "conn2k_last_error",
        "CONN2K_STATUS_INTERNAL = 3",
        "typedef struct Conn2kGraph Conn2kGraph;",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }

    let Ok(status) =
        Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"]).arg(&header).status()
    else {
        eprintln!("no C compiler, skipping syntax check");
        return;
    };
    assert!(status.success());
}
