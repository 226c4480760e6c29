//! Prime lists of the eight published half-length frequency tables.
//!
//! Only the primes are pinned here. Their rows are always recomputed.

use crate::census::{ClassKey, LengthClass, Parity};

#[derive(Debug, Clone, Copy)]
pub struct TableFixture {
    pub number: u8,
    pub lsd: u8,
    pub second_parity: Parity,
    /// In published row order.
    pub primes: &'static [u64],
}

impl TableFixture {
    pub fn key(&self) -> ClassKey {
        ClassKey::new(self.lsd, self.second_parity, LengthClass::Half)
    }
}

/// Looks up table `number` (1 through 8).
pub fn table(number: u8) -> Option<&'static TableFixture> {
    TABLES.iter().find(|t| t.number == number)
}

pub static TABLES: [TableFixture; 8] = [
    TableFixture {
        number: 1,
        lsd: 1,
        second_parity: Parity::Even,
        primes: &[
            601, 3001, 84_401, 473_201, 965_801,
            6121, 17_321, 317_921, 342_521, 940_721,
            5441, 22_441, 166_841, 394_241, 924_641,
            761, 73_361, 104_761, 371_561, 899_161,
            881, 5281, 42_281, 309_481, 989_081,
        ],
    },
    TableFixture {
        number: 2,
        lsd: 1,
        second_parity: Parity::Odd,
        primes: &[
            911, 3511, 33_311, 388_111, 997_511,
            631, 5231, 77_431, 454_031, 911_831,
            151, 2351, 57_751, 288_551, 998_951,
            1471, 23_071, 76_871, 597_671, 996_271,
            991, 9391, 27_791, 347_591, 878_191,
        ],
    },
    TableFixture {
        number: 3,
        lsd: 3,
        second_parity: Parity::Even,
        primes: &[
            2203, 5003, 64_403, 431_603, 996_803,
            523, 5923, 92_723, 354_323, 954_323,
            443, 7643, 49_043, 382_843, 844_243,
            563, 8963, 19_763, 498_163, 950_363,
            683, 6883, 27_283, 233_083, 985_483,
        ],
    },
    TableFixture {
        number: 4,
        lsd: 3,
        second_parity: Parity::Odd,
        primes: &[
            5413, 49_613, 89_213, 235_013, 914_813,
            3533, 18_133, 48_733, 266_333, 986_933,
            653, 6053, 61_253, 391_453, 984_853,
            373, 6173, 70_573, 228_773, 982_973,
            293, 8093, 33_493, 449_693, 993_893,
        ],
    },
    TableFixture {
        number: 5,
        lsd: 7,
        second_parity: Parity::Even,
        primes: &[
            307, 5507, 17_107, 195_907, 953_707,
            827, 2027, 23_227, 139_627, 963_427,
            947, 5147, 33_547, 197_347, 995_747,
            467, 3067, 25_667, 313_267, 992_867,
            787, 5387, 16_187, 330_587, 995_987,
        ],
    },
    TableFixture {
        number: 6,
        lsd: 7,
        second_parity: Parity::Odd,
        primes: &[
            2917, 14_717, 74_317, 243_517, 999_917,
            2437, 51_637, 92_237, 209_837, 997_037,
            557, 4157, 33_757, 179_957, 977_357,
            877, 30_677, 15_077, 248_477, 985_277,
            197, 4597, 18_397, 795_997, 989_797,
        ],
    },
    TableFixture {
        number: 7,
        lsd: 9,
        second_parity: Parity::Even,
        primes: &[
            409, 3209, 17_609, 194_809, 974_009,
            929, 4129, 24_329, 254_729, 996_529,
            1049, 48_449, 56_249, 304_849, 996_649,
            569, 8969, 46_769, 230_369, 993_169,
            2089, 30_689, 76_289, 602_489, 990_889,
        ],
    },
    TableFixture {
        number: 8,
        lsd: 9,
        second_parity: Parity::Odd,
        primes: &[
            919, 5519, 23_719, 201_119, 994_319,
            839, 4639, 34_439, 348_239, 994_039,
            359, 1759, 23_159, 346_559, 999_959,
            479, 3079, 44_279, 193_679, 961_879,
            599, 6199, 41_399, 445_799, 989_999,
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::classify;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(TABLES.iter().map(|t| t.primes.len()).sum::<usize>(), 200);
        for t in &TABLES {
            for &p in t.primes {
                assert_eq!(classify(p).unwrap().key, t.key(), "table {} prime {p}", t.number);
            }
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(table(1).unwrap().primes[0], 601);
        assert_eq!(table(6).unwrap().primes[0], 2917);
        assert!(table(0).is_none());
        assert!(table(9).is_none());
    }
}
