//! Every example program runs to completion.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example().unwrap();
            }
        }
    };
}

example!(special_functions);
example!(channel_sampling);
example!(closed_forms);
example!(diversity_order);
example!(monte_carlo);
example!(figure_sweep);
example!(config_sweep);
