macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(graded_algebra);
example!(exact_linalg);
example!(ks_complex);
example!(cohomology);
example!(toomer);
example!(cup_length);
example!(filtration);
example!(verify_bound);
example!(mapping_cylinder);
example!(lifting);
example!(resolution);
example!(corpus);
example!(load_document);

#[test]
fn examples_run() {
    graded_algebra::run_example().unwrap();
    exact_linalg::run_example().unwrap();
    ks_complex::run_example().unwrap();
    cohomology::run_example().unwrap();
    toomer::run_example().unwrap();
    cup_length::run_example().unwrap();
    filtration::run_example().unwrap();
    verify_bound::run_example().unwrap();
    mapping_cylinder::run_example().unwrap();
    lifting::run_example().unwrap();
    resolution::run_example().unwrap();
    corpus::run_example().unwrap();
    load_document::run_example().unwrap();
}
