//! Builds `tests/c/smoke.c` against the generated header and the static library.

use std::env;
use std::path::{Path, PathBuf};
use std::process::Command;

fn static_lib() -> PathBuf {
    // target/<profile>/deps/c_header-<hash>
    let exe = env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    profile_dir.join("libgenfrob_ffi.a")
}

#[test]
fn header_declares_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/genfrob.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "gf_tuple_new",
        "gf_denumerant",
        "gf_series_new",
        "gf_gen_frobenius",
        "gf_cases_row",
        "gf_last_error_message",
        "GF_STATUS_CAPACITY_EXCEEDED",
        "typedef struct GfTuple GfTuple",
    ] {
        assert!(text.contains(name), "header is missing {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let cc = env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler found ({cc}); skipping");
        return;
    }
    let lib = static_lib();
    assert!(lib.exists(), "{} not built", lib.display());

    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("genfrob_smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());

    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
