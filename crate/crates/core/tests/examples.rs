//! Every runnable example also runs as a test.

macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(milnor_algebra, "milnor_algebra.rs");
example!(associated_forms, "associated_forms.rs");
example!(quartic_and_cubic, "quartic_and_cubic.rs");
example!(quintic_invariants, "quintic_invariants.rs");
example!(quintic_connection, "quintic_connection.rs");
example!(sextic_classification, "sextic_classification.rs");
example!(sextic_octavic, "sextic_octavic.rs");
example!(equivalence, "equivalence.rs");
example!(identity_suites, "identity_suites.rs");
example!(command_line, "command_line.rs");
