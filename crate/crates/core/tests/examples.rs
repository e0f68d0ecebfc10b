mod pipeline_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pipeline.rs"));
}

mod prism_audit_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/prism_audit.rs"
    ));
}

mod fuzz_campaign_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/fuzz_campaign.rs"
    ));
}

mod scaling_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scaling.rs"));
}

mod oracles_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/oracles.rs"));
}

mod matchings_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/matchings.rs"
    ));
}

#[test]
fn pipeline_example_runs() {
    pipeline_example::run_example().expect("pipeline example should run");
}

#[test]
fn prism_audit_example_runs() {
    prism_audit_example::run_example().expect("prism audit example should run");
}

#[test]
fn fuzz_campaign_example_runs() {
    fuzz_campaign_example::run_example().expect("fuzz campaign example should run");
}

#[test]
fn scaling_example_runs() {
    scaling_example::run_example().expect("scaling example should run");
}

#[test]
fn oracles_example_runs() {
    oracles_example::run_example().expect("oracles example should run");
}

#[test]
fn matchings_example_runs() {
    matchings_example::run_example().expect("matchings example should run");
}
