macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(curve_report, "curve_report.rs");
example!(lyapunov_tables, "lyapunov_tables.rs");
example!(covering_relations, "covering_relations.rs");
example!(trace_fields, "trace_fields.rs");
example!(square_tiled_lifts, "square_tiled_lifts.rs");
example!(generator_equations, "generator_equations.rs");

#[test]
fn curve_report_runs() {
    curve_report::run_example().expect("curve report example should run");
    assert!(curve_report::report_for(1, 9).is_err());
}

#[test]
fn lyapunov_tables_runs() {
    lyapunov_tables::run_example().expect("table example should run");
}

#[test]
fn covering_relations_runs() {
    covering_relations::run_example().expect("covers example should run");
}

#[test]
fn trace_fields_runs() {
    trace_fields::run_example().expect("trace-field example should run");
}

#[test]
fn square_tiled_lifts_runs() {
    square_tiled_lifts::run_example().expect("square-tiled example should run");
}

#[test]
fn generator_equations_runs() {
    generator_equations::run_example().expect("generator example should run");
}
