macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));

            #[test]
            fn runs() {
                run_example().expect(concat!($file, " should run"));
            }
        }
    };
}

example!(series_arithmetic, "series_arithmetic.rs");
example!(qzeta_values, "qzeta_values.rs");
example!(quasimodular_decomposition, "quasimodular_decomposition.rs");
example!(fock_traces, "fock_traces.rs");
example!(equivariant_ch1ch1, "equivariant_ch1ch1.rs");
example!(surface_ch1ch1, "surface_ch1ch1.rs");
example!(verify_checks, "verify_checks.rs");
example!(expression_language, "expression_language.rs");
