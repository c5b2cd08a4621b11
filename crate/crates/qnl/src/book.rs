//! Compiles every code block of the book as a doctest, so `cargo test`
//! keeps the guide in sync with the library.

macro_rules! chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        mod $name {}
    };
}

chapter!(introduction, "../../../book/src/introduction.md");
chapter!(codes, "../../../book/src/codes.md");
chapter!(standard_form, "../../../book/src/standard-form.md");
chapter!(distances, "../../../book/src/distances.md");
chapter!(spectra, "../../../book/src/spectra.md");
chapter!(propagation, "../../../book/src/propagation.md");
chapter!(independence, "../../../book/src/independence.md");
chapter!(verification, "../../../book/src/verification.md");
chapter!(cli, "../../../book/src/cli.md");
