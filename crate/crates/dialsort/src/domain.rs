//! Sorting over arbitrary finite totally ordered domains.
//!
//! Any domain with a computable order-isomorphism onto `[0, U)` sorts through
//! the same tally-and-sweep mechanism as plain integers: encode each element
//! to its index, ingest the indices, sweep the universe decoding each
//! occupied cell back once. Elements are never order-compared.

use crate::error::{Error, Result};
use crate::histogram::{Histogram, Universe};

/// An order-isomorphism between a finite totally ordered domain and the index
/// space `[0, U)`.
///
/// `encode` and `decode` must be mutual inverses, and `encode` must be
/// strictly order-preserving: `s1 < s2` in the domain iff
/// `encode(s1) < encode(s2)`. [`validate_codec`] checks both properties on a
/// sample set. Codecs are read-only and must be safe to share across
/// concurrent sorts.
pub trait DomainCodec {
    type Element: Clone;

    /// The index space; every encoding must land in `[0, universe.size())`.
    fn universe(&self) -> Universe;

    fn encode(&self, element: &Self::Element) -> u64;

    fn decode(&self, index: u64) -> Self::Element;
}

/// Byte domain under its numeric order; `encode` is the code point itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct ByteCodec;

impl DomainCodec for ByteCodec {
    type Element = u8;

    fn universe(&self) -> Universe {
        Universe::new(256).expect("256 is a valid universe")
    }

    fn encode(&self, element: &u8) -> u64 {
        u64::from(*element)
    }

    fn decode(&self, index: u64) -> u8 {
        index as u8
    }
}

/// Sorts `items` into domain order: exactly one `encode` call per element,
/// at most one `decode` call per universe cell.
pub fn sort_domain<C: DomainCodec>(items: &mut [C::Element], codec: &C) -> Result<()> {
    let universe = codec.universe();
    let mut histogram = Histogram::new(universe)?;
    for item in items.iter() {
        let index = codec.encode(item);
        if index >= universe.size() {
            return Err(Error::CodecIndexOutOfRange {
                index,
                universe: universe.size(),
            });
        }
        histogram.add(index as u32, 1)?;
    }

    let mut written = 0;
    for (index, &count) in histogram.counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        let element = codec.decode(index as u64);
        let count = count as usize;
        for slot in &mut items[written..written + count] {
            *slot = element.clone();
        }
        written += count;
    }
    debug_assert_eq!(written, items.len());
    Ok(())
}

/// Checks the codec's hypotheses on `samples`: `decode(encode(s)) == s` for
/// every sample, encodings in range, and `encode` strictly monotone with
/// respect to the domain order. Vacuously true on an empty sample set.
pub fn validate_codec<C>(codec: &C, samples: &[C::Element]) -> bool
where
    C: DomainCodec,
    C::Element: Ord,
{
    let size = codec.universe().size();
    for sample in samples {
        let index = codec.encode(sample);
        if index >= size || codec.decode(index) != *sample {
            return false;
        }
    }
    let mut ordered: Vec<&C::Element> = samples.iter().collect();
    ordered.sort();
    ordered.windows(2).all(|pair| {
        let (a, b) = (codec.encode(pair[0]), codec.encode(pair[1]));
        match pair[0].cmp(pair[1]) {
            std::cmp::Ordering::Less => a < b,
            std::cmp::Ordering::Equal => a == b,
            std::cmp::Ordering::Greater => unreachable!("samples are sorted"),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::cell::Cell;

    #[test]
    fn byte_domain_sorts_ascii() {
        let mut bytes = *b"dcba";
        sort_domain(&mut bytes, &ByteCodec).unwrap();
        assert_eq!(&bytes, b"abcd");
    }

    /// MIDI notes: φ = note number, U = 128.
    struct MidiCodec;

    impl DomainCodec for MidiCodec {
        type Element = u8;

        fn universe(&self) -> Universe {
            Universe::new(128).unwrap()
        }

        fn encode(&self, element: &u8) -> u64 {
            u64::from(*element)
        }

        fn decode(&self, index: u64) -> u8 {
            index as u8
        }
    }

    #[test]
    fn midi_domain_sorts_notes() {
        let mut notes = [60u8, 0, 127];
        sort_domain(&mut notes, &MidiCodec).unwrap();
        assert_eq!(notes, [0, 60, 127]);
    }

    /// Seven-element enumerated domain with a table-driven isomorphism.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    enum NoteName {
        C,
        D,
        E,
        F,
        G,
        A,
        B,
    }

    const NOTE_TABLE: [NoteName; 7] = [
        NoteName::C,
        NoteName::D,
        NoteName::E,
        NoteName::F,
        NoteName::G,
        NoteName::A,
        NoteName::B,
    ];

    struct NoteCodec;

    impl DomainCodec for NoteCodec {
        type Element = NoteName;

        fn universe(&self) -> Universe {
            Universe::new(7).unwrap()
        }

        fn encode(&self, element: &NoteName) -> u64 {
            NOTE_TABLE.iter().position(|n| n == element).unwrap() as u64
        }

        fn decode(&self, index: u64) -> NoteName {
            NOTE_TABLE[index as usize]
        }
    }

    #[test]
    fn enum_domain_matches_comparison_oracle() {
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..100 {
            let mut items: Vec<NoteName> = (0..rng.gen_range(0..64))
                .map(|_| NOTE_TABLE[rng.gen_range(0..7)])
                .collect();
            let mut oracle = items.clone();
            oracle.sort(); // comparison sort under the domain order
            sort_domain(&mut items, &NoteCodec).unwrap();
            assert_eq!(items, oracle);
        }
    }

    #[test]
    fn validate_codec_accepts_byte_identity() {
        let all: Vec<u8> = (0..=255).collect();
        assert!(validate_codec(&ByteCodec, &all));
    }

    #[test]
    fn validate_codec_rejects_swapped_decode_table() {
        struct SwappedCodec;

        impl DomainCodec for SwappedCodec {
            type Element = u8;

            fn universe(&self) -> Universe {
                Universe::new(4).unwrap()
            }

            fn encode(&self, element: &u8) -> u64 {
                u64::from(*element)
            }

            fn decode(&self, index: u64) -> u8 {
                // entries 1 and 2 deliberately swapped
                [0u8, 2, 1, 3][index as usize]
            }
        }

        assert!(!validate_codec(&SwappedCodec, &[0, 1, 2, 3]));
    }

    #[test]
    fn validate_codec_vacuous_on_empty_samples() {
        assert!(validate_codec(&ByteCodec, &[]));
    }

    #[test]
    fn codec_error_on_out_of_range_encoding() {
        struct NarrowCodec;

        impl DomainCodec for NarrowCodec {
            type Element = u8;

            fn universe(&self) -> Universe {
                Universe::new(4).unwrap()
            }

            fn encode(&self, element: &u8) -> u64 {
                u64::from(*element)
            }

            fn decode(&self, index: u64) -> u8 {
                index as u8
            }
        }

        let mut items = [1u8, 9];
        assert_eq!(
            sort_domain(&mut items, &NarrowCodec).unwrap_err(),
            Error::CodecIndexOutOfRange {
                index: 9,
                universe: 4
            }
        );
    }

    /// Codec wrapper counting encode/decode invocations.
    struct CountingCodec<C> {
        inner: C,
        encodes: Cell<u64>,
        decodes: Cell<u64>,
    }

    impl<C: DomainCodec> DomainCodec for CountingCodec<C> {
        type Element = C::Element;

        fn universe(&self) -> Universe {
            self.inner.universe()
        }

        fn encode(&self, element: &Self::Element) -> u64 {
            self.encodes.set(self.encodes.get() + 1);
            self.inner.encode(element)
        }

        fn decode(&self, index: u64) -> Self::Element {
            self.decodes.set(self.decodes.get() + 1);
            self.inner.decode(index)
        }
    }

    #[test]
    fn cost_structure_n_encodes_at_most_u_decodes() {
        let mut rng = StdRng::seed_from_u64(6);
        let mut items: Vec<u8> = (0..500).map(|_| rng.gen()).collect();
        let codec = CountingCodec {
            inner: ByteCodec,
            encodes: Cell::new(0),
            decodes: Cell::new(0),
        };
        sort_domain(&mut items, &codec).unwrap();
        assert_eq!(codec.encodes.get(), 500);
        assert!(codec.decodes.get() <= 256);
        // one decode per distinct value
        let mut distinct = items.clone();
        distinct.dedup();
        assert_eq!(codec.decodes.get(), distinct.len() as u64);
    }
}
