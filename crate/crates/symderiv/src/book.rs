//! The guide chapters double as doc-tests: every fenced Rust snippet in
//! `book/src/*.md` compiles and runs under `cargo test --doc`, which
//! keeps the narrative in lockstep with the API. One module per chapter
//! so a failure names its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
#[cfg(doctest)]
pub struct ChapterIntroduction;

#[doc = include_str!("../../../book/src/partitions.md")]
#[cfg(doctest)]
pub struct ChapterPartitions;

#[doc = include_str!("../../../book/src/characters.md")]
#[cfg(doctest)]
pub struct ChapterCharacters;

#[doc = include_str!("../../../book/src/chords.md")]
#[cfg(doctest)]
pub struct ChapterChords;

#[doc = include_str!("../../../book/src/tensors.md")]
#[cfg(doctest)]
pub struct ChapterTensors;

#[doc = include_str!("../../../book/src/derivations.md")]
#[cfg(doctest)]
pub struct ChapterDerivations;

#[doc = include_str!("../../../book/src/genus-one.md")]
#[cfg(doctest)]
pub struct ChapterGenusOne;

#[doc = include_str!("../../../book/src/cli.md")]
#[cfg(doctest)]
pub struct ChapterCli;
