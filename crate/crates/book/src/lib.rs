//! Each chapter of the guide is attached to an item below so that its code
//! blocks run under `cargo test`.

macro_rules! chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            #[cfg(doctest)]
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub struct $name;
        )*
    };
}

chapters! {
    Introduction => "introduction.md",
    ExactArithmetic => "exact-arithmetic.md",
    Algebra => "algebra.md",
    Quiver => "quiver.md",
    CalogeroMoser => "calogero-moser.md",
    Triples => "triples.md",
    IcStalks => "ic-stalks.md",
    Cli => "cli.md",
}
