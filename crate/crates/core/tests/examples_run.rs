// Every example under examples/ runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run().expect("example should run");
        }
    };
}

example!(laurent_and_ratfun);
example!(gaussian_binomials);
example!(normal_ordering);
example!(q_exponential);
example!(direct_relation);
example!(reversed_relation);
example!(identity_suite);
example!(matrix_oracle);
example!(parse_and_expand);
