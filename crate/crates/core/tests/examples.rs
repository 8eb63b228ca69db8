mod grading_rules_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/grading_rules.rs"));
}

#[test]
fn grading_rules_example_runs() {
    grading_rules_example::run_example().expect("grading rules example should run");
}

mod su11_extension_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/su11_extension.rs"));
}

#[test]
fn su11_extension_example_runs() {
    su11_extension_example::run_example().expect("su11 extension example should run");
}

mod paraboson_map_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/paraboson_map.rs"));
}

#[test]
fn paraboson_map_example_runs() {
    paraboson_map_example::run_example().expect("paraboson map example should run");
}

mod para_lie_system_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/para_lie_system.rs"));
}

#[test]
fn para_lie_system_example_runs() {
    para_lie_system_example::run_example().expect("para lie system example should run");
}

mod green_representation_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/green_representation.rs"));
}

#[test]
fn green_representation_example_runs() {
    green_representation_example::run_example().expect("green representation example should run");
}

mod trilinear_relations_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/trilinear_relations.rs"));
}

#[test]
fn trilinear_relations_example_runs() {
    trilinear_relations_example::run_example().expect("trilinear relations example should run");
}

mod structure_constants_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/structure_constants.rs"));
}

#[test]
fn structure_constants_example_runs() {
    structure_constants_example::run_example().expect("structure constants example should run");
}

mod subalgebras_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/subalgebras.rs"));
}

#[test]
fn subalgebras_example_runs() {
    subalgebras_example::run_example().expect("subalgebras example should run");
}

mod supercharge_spectra_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/supercharge_spectra.rs"));
}

#[test]
fn supercharge_spectra_example_runs() {
    supercharge_spectra_example::run_example().expect("supercharge spectra example should run");
}

mod command_line_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[test]
fn command_line_example_runs() {
    command_line_example::run_example().expect("command line example should run");
}
