// Runs every example so they stay in sync with the library.

mod taylor_jets {
    #![allow(dead_code)]
    include!("../examples/taylor_jets.rs");

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod circulant_algebra {
    #![allow(dead_code)]
    include!("../examples/circulant_algebra.rs");

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod homothetic_cyclic {
    #![allow(dead_code)]
    include!("../examples/homothetic_cyclic.rs");

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod spherical_darboux {
    #![allow(dead_code)]
    include!("../examples/spherical_darboux.rs");

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod pole_curves {
    #![allow(dead_code)]
    include!("../examples/pole_curves.rs");

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod acceleration_centers {
    #![allow(dead_code)]
    include!("../examples/acceleration_centers.rs");

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod curve_files {
    #![allow(dead_code)]
    include!("../examples/curve_files.rs");

    #[test]
    fn runs() {
        run().unwrap();
    }
}
