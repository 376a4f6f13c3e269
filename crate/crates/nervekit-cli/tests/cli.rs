//! End-to-end tests driving the built binary on the committed sample inputs.
//!
//! Regenerate `tests/data/` with `NERVEKIT_BLESS=1` (the inputs are produced
//! from the library corpus and saved through the schema layer).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Arc;

use nervekit::corpus::{arrow_diagram, disc_cyclic, one_object_z2, reduction_functor};
use nervekit::monoidal::MonoidalFunctor;
use nervekit::schema::{BraidedFile, CategoryFile, DiagramFile, InputFile};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_nervekit")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not json ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn regenerate_sample_inputs() {
    if std::env::var("NERVEKIT_BLESS").is_err() {
        return;
    }
    let dir = data("");
    std::fs::create_dir_all(&dir).unwrap();
    let z2 = Arc::new(disc_cyclic(2));
    let z4 = Arc::new(disc_cyclic(4));

    let write = |name: &str, input: &InputFile| {
        std::fs::write(data(name), input.to_json()).unwrap();
    };
    write(
        "category_point.json",
        &InputFile::Category(CategoryFile::from_category(&nervekit::ordinal(0))),
    );
    write(
        "category_z2_group.json",
        &InputFile::Category(CategoryFile::from_category(
            &nervekit::corpus::cyclic_group_category(2),
        )),
    );
    write(
        "braided_disc_z2.json",
        &InputFile::Braided(BraidedFile::from_braided(&z2)),
    );
    write(
        "braided_one_object_z2.json",
        &InputFile::Braided(BraidedFile::from_braided(&one_object_z2())),
    );
    write(
        "braided_diagram_point.json",
        &InputFile::BraidedDiagram(DiagramFile::from_braided_diagram(
            &nervekit::corpus::constant_diagram(nervekit::ordinal(0), &z2),
        )),
    );
    let arrow_id = arrow_diagram(z2.clone(), z2.clone(), MonoidalFunctor::identity(&z2.mon));
    write(
        "braided_diagram_arrow_identity.json",
        &InputFile::BraidedDiagram(DiagramFile::from_braided_diagram(&arrow_id)),
    );
    let arrow_red = arrow_diagram(z4.clone(), z2.clone(), reduction_functor(4, 2));
    write(
        "braided_diagram_arrow_reduction.json",
        &InputFile::BraidedDiagram(DiagramFile::from_braided_diagram(&arrow_red)),
    );
    write(
        "monoidal_diagram_arrow_reduction.json",
        &InputFile::MonoidalDiagram(DiagramFile::from_monoidal_diagram(&arrow_red.as_monoidal())),
    );
    // broken hexagon: flip the unique braiding entry of the one-object category
    let mut broken = one_object_z2();
    broken.braiding[0][0] = 1;
    write(
        "braided_broken_hexagon.json",
        &InputFile::Braided(BraidedFile::from_braided(&broken)),
    );
    // corrupted transfer: reroute one morphism image of the reduction functor
    let mut bad = reduction_functor(4, 2);
    bad.functor.mor_map[1] = 0;
    let bad_diagram = arrow_diagram(z4, z2, bad);
    write(
        "braided_diagram_bad_transfer.json",
        &InputFile::BraidedDiagram(DiagramFile::from_braided_diagram(&bad_diagram)),
    );
    std::fs::write(data("malformed.json"), "{ this is not json").unwrap();
}

#[test]
fn validate_clean_inputs_exit_zero() {
    for file in [
        "braided_disc_z2.json",
        "braided_one_object_z2.json",
        "braided_diagram_arrow_identity.json",
        "braided_diagram_arrow_reduction.json",
        "monoidal_diagram_arrow_reduction.json",
    ] {
        let out = run(&["validate", "--input", data(file).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{file}: {out:?}");
        let v = stdout_json(&out);
        assert_eq!(v["violations"].as_array().unwrap().len(), 0, "{file}");
    }
}

#[test]
fn validate_broken_hexagon_exits_one_and_names_the_instance() {
    let out = run(&["validate", "--input", data("braided_broken_hexagon.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    let text = v.to_string();
    assert!(text.contains("hexagon"), "report should name the hexagon: {text}");
}

#[test]
fn malformed_json_exits_two() {
    let out = run(&["validate", "--input", data("malformed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["validate", "--input", data("no_such_file.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nerve_cards_disc_z2() {
    let out = run(&[
        "nerve",
        "--input",
        data("braided_disc_z2.json").to_str().unwrap(),
        "--truncation",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v = stdout_json(&out);
    assert_eq!(v["cards"], serde_json::json!([1, 1, 2, 8, 64, 1024]));
}

#[test]
fn nerve_cards_for_plain_categories() {
    let out = run(&[
        "nerve",
        "--input",
        data("category_z2_group.json").to_str().unwrap(),
        "--truncation",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert_eq!(stdout_json(&out)["cards"], serde_json::json!([1, 2, 4, 8]));

    let out = run(&[
        "nerve",
        "--input",
        data("category_point.json").to_str().unwrap(),
        "--truncation",
        "3",
    ]);
    assert_eq!(stdout_json(&out)["cards"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn hocolim_cards_arrow_identity() {
    let out = run(&[
        "hocolim",
        "--input",
        data("braided_diagram_arrow_identity.json").to_str().unwrap(),
        "--truncation",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v = stdout_json(&out);
    assert_eq!(v["cards"], serde_json::json!([2, 3, 8, 40]));
}

#[test]
fn check_theorem_certifies_arrow_identity() {
    let out = run(&[
        "check-theorem",
        "--input",
        data("braided_diagram_arrow_identity.json").to_str().unwrap(),
        "--truncation",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v = stdout_json(&out);
    assert_eq!(v["overall"], serde_json::json!(true));
    assert_eq!(v["triangle"]["commutes"], serde_json::json!(true));
}

#[test]
fn check_theorem_on_the_constant_point_diagram_collapses() {
    let out = run(&[
        "check-theorem",
        "--input",
        data("braided_diagram_point.json").to_str().unwrap(),
        "--truncation",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v = stdout_json(&out);
    assert_eq!(v["overall"], serde_json::json!(true));
    // over the point the transport comparison is itself an isomorphism
    assert_eq!(v["hocolim_to_nerve_iso"], serde_json::json!(true));
}

#[test]
fn check_theorem_rejects_corrupted_transfer() {
    let out = run(&[
        "check-theorem",
        "--input",
        data("braided_diagram_bad_transfer.json").to_str().unwrap(),
        "--truncation",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let v = stdout_json(&out);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = run(&[
        "check-theorem",
        "--input",
        data("braided_diagram_arrow_identity.json").to_str().unwrap(),
        "--truncation",
        "4",
        "--budget",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn homology_report_for_disc_z2() {
    let out = run(&[
        "homology",
        "--input",
        data("braided_disc_z2.json").to_str().unwrap(),
        "--truncation",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v = stdout_json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["betti"], serde_json::json!(1));
    assert_eq!(rows[2]["torsion"], serde_json::json!(["2"]));
    assert_eq!(rows[2]["trusted"], serde_json::json!(true));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let input = data("braided_disc_z2.json");
    let args = [
        "nerve",
        "--input",
        input.to_str().unwrap(),
        "--truncation",
        "4",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    // and with an explicit thread cap
    let c = Command::new(bin())
        .args(args)
        .env("NERVEKIT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn text_format_is_line_oriented_and_stable() {
    let input = data("braided_disc_z2.json");
    let args = [
        "nerve",
        "--input",
        input.to_str().unwrap(),
        "--truncation",
        "3",
        "--format",
        "text",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("cards[0]: 1")), "{text}");
    let b = run(&args);
    assert_eq!(text, String::from_utf8(b.stdout).unwrap());
}

#[test]
fn output_file_is_written_atomically() {
    let dir = std::env::temp_dir().join(format!("nervekit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("report.json");
    let out = run(&[
        "nerve",
        "--input",
        data("braided_disc_z2.json").to_str().unwrap(),
        "--truncation",
        "3",
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["cards"], serde_json::json!([1, 1, 2, 8]));
    std::fs::remove_dir_all(&dir).ok();
}
