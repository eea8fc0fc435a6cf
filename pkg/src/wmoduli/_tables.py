"""Generated by tools/gen_tables.py; do not edit."""

IGUSA = {
    'J2': [((0, 0, 0, 2, 0, 0, 0), 6), ((0, 0, 1, 0, 1, 0, 0), -16), ((0, 1, 0, 0, 0, 1, 0), 40), ((1, 0, 0, 0, 0, 0, 1), -240)],
    'J4': [((0, 0, 2, 0, 2, 0, 0), 4), ((0, 0, 2, 1, 0, 1, 0), -12), ((0, 0, 3, 0, 0, 0, 1), 48), ((0, 1, 0, 1, 2, 0, 0), -12), ((0, 1, 0, 2, 0, 1, 0), 36), ((0, 1, 1, 0, 1, 1, 0), 4), ((0, 1, 1, 1, 0, 0, 1), -180), ((0, 2, 0, 0, 0, 2, 0), -80), ((0, 2, 0, 0, 1, 0, 1), 300), ((1, 0, 0, 0, 3, 0, 0), 48), ((1, 0, 0, 1, 1, 1, 0), -180), ((1, 0, 0, 2, 0, 0, 1), 324), ((1, 0, 1, 0, 0, 2, 0), 300), ((1, 0, 1, 0, 1, 0, 1), -504), ((1, 1, 0, 0, 0, 1, 1), -540), ((2, 0, 0, 0, 0, 0, 2), 1620)],
    'J6': [((0, 0, 2, 2, 2, 0, 0), 8), ((0, 0, 2, 3, 0, 1, 0), -24), ((0, 0, 3, 0, 3, 0, 0), -24), ((0, 0, 3, 1, 1, 1, 0), 76), ((0, 0, 3, 2, 0, 0, 1), 60), ((0, 0, 4, 0, 0, 2, 0), -36), ((0, 0, 4, 0, 1, 0, 1), -160), ((0, 1, 0, 3, 2, 0, 0), -24), ((0, 1, 0, 4, 0, 1, 0), 72), ((0, 1, 1, 1, 3, 0, 0), 76), ((0, 1, 1, 2, 1, 1, 0), -238), ((0, 1, 1, 3, 0, 0, 1), -198), ((0, 1, 2, 0, 2, 1, 0), 28), ((0, 1, 2, 1, 0, 2, 0), 26), ((0, 1, 2, 1, 1, 0, 1), 492), ((0, 1, 3, 0, 0, 1, 1), 616), ((0, 2, 0, 0, 4, 0, 0), -36), ((0, 2, 0, 1, 2, 1, 0), 26), ((0, 2, 0, 2, 0, 2, 0), 176), ((0, 2, 0, 2, 1, 0, 1), 330), ((0, 2, 1, 0, 1, 2, 0), 64), ((0, 2, 1, 0, 2, 0, 1), -640), ((0, 2, 1, 1, 0, 1, 1), -1860), ((0, 2, 2, 0, 0, 0, 2), -900), ((0, 3, 0, 0, 0, 3, 0), -320), ((0, 3, 0, 0, 1, 1, 1), 1600), ((0, 3, 0, 1, 0, 0, 2), 2250), ((1, 0, 0, 2, 3, 0, 0), 60), ((1, 0, 0, 3, 1, 1, 0), -198), ((1, 0, 0, 4, 0, 0, 1), 162), ((1, 0, 1, 0, 4, 0, 0), -160), ((1, 0, 1, 1, 2, 1, 0), 492), ((1, 0, 1, 2, 0, 2, 0), 330), ((1, 0, 1, 2, 1, 0, 1), -468), ((1, 0, 2, 0, 1, 2, 0), -640), ((1, 0, 2, 0, 2, 0, 1), 424), ((1, 0, 2, 1, 0, 1, 1), -876), ((1, 0, 3, 0, 0, 0, 2), -96), ((1, 1, 0, 0, 3, 1, 0), 616), ((1, 1, 0, 1, 1, 2, 0), -1860), ((1, 1, 0, 1, 2, 0, 1), -876), ((1, 1, 0, 2, 0, 1, 1), 1818), ((1, 1, 1, 0, 0, 3, 0), 1600), ((1, 1, 1, 0, 1, 1, 1), 3472), ((1, 1, 1, 1, 0, 0, 2), 3060), ((1, 2, 0, 0, 0, 2, 1), -2240), ((1, 2, 0, 0, 1, 0, 2), -18600), ((2, 0, 0, 0, 2, 2, 0), -900), ((2, 0, 0, 0, 3, 0, 1), -96), ((2, 0, 0, 1, 0, 3, 0), 2250), ((2, 0, 0, 1, 1, 1, 1), 3060), ((2, 0, 0, 2, 0, 0, 2), -10044), ((2, 0, 1, 0, 0, 2, 1), -18600), ((2, 0, 1, 0, 1, 0, 2), 20664), ((2, 1, 0, 0, 0, 1, 2), 59940), ((3, 0, 0, 0, 0, 0, 3), -119880)],
    'J10': [((0, 2, 2, 2, 2, 2, 0), 1), ((0, 2, 2, 2, 3, 0, 1), -4), ((0, 2, 2, 3, 0, 3, 0), -4), ((0, 2, 2, 3, 1, 1, 1), 18), ((0, 2, 2, 4, 0, 0, 2), -27), ((0, 2, 3, 0, 3, 2, 0), -4), ((0, 2, 3, 0, 4, 0, 1), 16), ((0, 2, 3, 1, 1, 3, 0), 18), ((0, 2, 3, 1, 2, 1, 1), -80), ((0, 2, 3, 2, 0, 2, 1), -6), ((0, 2, 3, 2, 1, 0, 2), 144), ((0, 2, 4, 0, 0, 4, 0), -27), ((0, 2, 4, 0, 1, 2, 1), 144), ((0, 2, 4, 0, 2, 0, 2), -128), ((0, 2, 4, 1, 0, 1, 2), -192), ((0, 2, 5, 0, 0, 0, 3), 256), ((0, 3, 0, 3, 2, 2, 0), -4), ((0, 3, 0, 3, 3, 0, 1), 16), ((0, 3, 0, 4, 0, 3, 0), 16), ((0, 3, 0, 4, 1, 1, 1), -72), ((0, 3, 0, 5, 0, 0, 2), 108), ((0, 3, 1, 1, 3, 2, 0), 18), ((0, 3, 1, 1, 4, 0, 1), -72), ((0, 3, 1, 2, 1, 3, 0), -80), ((0, 3, 1, 2, 2, 1, 1), 356), ((0, 3, 1, 3, 0, 2, 1), 24), ((0, 3, 1, 3, 1, 0, 2), -630), ((0, 3, 2, 0, 2, 3, 0), -6), ((0, 3, 2, 0, 3, 1, 1), 24), ((0, 3, 2, 1, 0, 4, 0), 144), ((0, 3, 2, 1, 1, 2, 1), -746), ((0, 3, 2, 1, 2, 0, 2), 560), ((0, 3, 2, 2, 0, 1, 2), 1020), ((0, 3, 3, 0, 0, 3, 1), -36), ((0, 3, 3, 0, 1, 1, 2), 160), ((0, 3, 3, 1, 0, 0, 3), -1600), ((0, 4, 0, 0, 4, 2, 0), -27), ((0, 4, 0, 0, 5, 0, 1), 108), ((0, 4, 0, 1, 2, 3, 0), 144), ((0, 4, 0, 1, 3, 1, 1), -630), ((0, 4, 0, 2, 0, 4, 0), -128), ((0, 4, 0, 2, 1, 2, 1), 560), ((0, 4, 0, 2, 2, 0, 2), 825), ((0, 4, 0, 3, 0, 1, 2), -900), ((0, 4, 1, 0, 1, 4, 0), -192), ((0, 4, 1, 0, 2, 2, 1), 1020), ((0, 4, 1, 0, 3, 0, 2), -900), ((0, 4, 1, 1, 0, 3, 1), 160), ((0, 4, 1, 1, 1, 1, 2), -2050), ((0, 4, 1, 2, 0, 0, 3), 2250), ((0, 4, 2, 0, 0, 2, 2), -50), ((0, 4, 2, 0, 1, 0, 3), 2000), ((0, 5, 0, 0, 0, 5, 0), 256), ((0, 5, 0, 0, 1, 3, 1), -1600), ((0, 5, 0, 0, 2, 1, 2), 2250), ((0, 5, 0, 1, 0, 2, 2), 2000), ((0, 5, 0, 1, 1, 0, 3), -3750), ((0, 5, 1, 0, 0, 1, 3), -2500), ((0, 6, 0, 0, 0, 0, 4), 3125), ((1, 0, 3, 2, 2, 2, 0), -4), ((1, 0, 3, 2, 3, 0, 1), 16), ((1, 0, 3, 3, 0, 3, 0), 16), ((1, 0, 3, 3, 1, 1, 1), -72), ((1, 0, 3, 4, 0, 0, 2), 108), ((1, 0, 4, 0, 3, 2, 0), 16), ((1, 0, 4, 0, 4, 0, 1), -64), ((1, 0, 4, 1, 1, 3, 0), -72), ((1, 0, 4, 1, 2, 1, 1), 320), ((1, 0, 4, 2, 0, 2, 1), 24), ((1, 0, 4, 2, 1, 0, 2), -576), ((1, 0, 5, 0, 0, 4, 0), 108), ((1, 0, 5, 0, 1, 2, 1), -576), ((1, 0, 5, 0, 2, 0, 2), 512), ((1, 0, 5, 1, 0, 1, 2), 768), ((1, 0, 6, 0, 0, 0, 3), -1024), ((1, 1, 1, 3, 2, 2, 0), 18), ((1, 1, 1, 3, 3, 0, 1), -72), ((1, 1, 1, 4, 0, 3, 0), -72), ((1, 1, 1, 4, 1, 1, 1), 324), ((1, 1, 1, 5, 0, 0, 2), -486), ((1, 1, 2, 1, 3, 2, 0), -80), ((1, 1, 2, 1, 4, 0, 1), 320), ((1, 1, 2, 2, 1, 3, 0), 356), ((1, 1, 2, 2, 2, 1, 1), -1584), ((1, 1, 2, 3, 0, 2, 1), -108), ((1, 1, 2, 3, 1, 0, 2), 2808), ((1, 1, 3, 0, 2, 3, 0), 24), ((1, 1, 3, 0, 3, 1, 1), -96), ((1, 1, 3, 1, 0, 4, 0), -630), ((1, 1, 3, 1, 1, 2, 1), 3272), ((1, 1, 3, 1, 2, 0, 2), -2496), ((1, 1, 3, 2, 0, 1, 2), -4464), ((1, 1, 4, 0, 0, 3, 1), 144), ((1, 1, 4, 0, 1, 1, 2), -640), ((1, 1, 4, 1, 0, 0, 3), 6912), ((1, 2, 0, 2, 3, 2, 0), -6), ((1, 2, 0, 2, 4, 0, 1), 24), ((1, 2, 0, 3, 1, 3, 0), 24), ((1, 2, 0, 3, 2, 1, 1), -108), ((1, 2, 0, 4, 1, 0, 2), 162), ((1, 2, 1, 0, 4, 2, 0), 144), ((1, 2, 1, 0, 5, 0, 1), -576), ((1, 2, 1, 1, 2, 3, 0), -746), ((1, 2, 1, 1, 3, 1, 1), 3272), ((1, 2, 1, 2, 0, 4, 0), 560), ((1, 2, 1, 2, 1, 2, 1), -2412), ((1, 2, 1, 2, 2, 0, 2), -4536), ((1, 2, 1, 3, 0, 1, 2), 3942), ((1, 2, 2, 0, 1, 4, 0), 1020), ((1, 2, 2, 0, 2, 2, 1), -5428), ((1, 2, 2, 0, 3, 0, 2), 4816), ((1, 2, 2, 1, 0, 3, 1), -682), ((1, 2, 2, 1, 1, 1, 2), 10152), ((1, 2, 2, 2, 0, 0, 3), -9720), ((1, 2, 3, 0, 0, 2, 2), 248), ((1, 2, 3, 0, 1, 0, 3), -10560), ((1, 3, 0, 0, 3, 3, 0), -36), ((1, 3, 0, 0, 4, 1, 1), 144), ((1, 3, 0, 1, 1, 4, 0), 160), ((1, 3, 0, 1, 2, 2, 1), -682), ((1, 3, 0, 1, 3, 0, 2), -120), ((1, 3, 0, 2, 0, 3, 1), -208), ((1, 3, 0, 2, 1, 1, 2), 1980), ((1, 3, 0, 3, 0, 0, 3), -1350), ((1, 3, 1, 0, 0, 5, 0), -1600), ((1, 3, 1, 0, 1, 3, 1), 9768), ((1, 3, 1, 0, 2, 1, 2), -13040), ((1, 3, 1, 1, 0, 2, 2), -12330), ((1, 3, 1, 1, 1, 0, 3), 19800), ((1, 3, 2, 0, 0, 1, 3), 15600), ((1, 4, 0, 0, 0, 4, 1), 320), ((1, 4, 0, 0, 1, 2, 2), -1700), ((1, 4, 0, 0, 2, 0, 3), 1500), ((1, 4, 0, 1, 0, 1, 3), 2250), ((1, 4, 1, 0, 0, 0, 4), -22500), ((2, 0, 0, 4, 2, 2, 0), -27), ((2, 0, 0, 4, 3, 0, 1), 108), ((2, 0, 0, 5, 0, 3, 0), 108), ((2, 0, 0, 5, 1, 1, 1), -486), ((2, 0, 0, 6, 0, 0, 2), 729), ((2, 0, 1, 2, 3, 2, 0), 144), ((2, 0, 1, 2, 4, 0, 1), -576), ((2, 0, 1, 3, 1, 3, 0), -630), ((2, 0, 1, 3, 2, 1, 1), 2808), ((2, 0, 1, 4, 0, 2, 1), 162), ((2, 0, 1, 4, 1, 0, 2), -4860), ((2, 0, 2, 0, 4, 2, 0), -128), ((2, 0, 2, 0, 5, 0, 1), 512), ((2, 0, 2, 1, 2, 3, 0), 560), ((2, 0, 2, 1, 3, 1, 1), -2496), ((2, 0, 2, 2, 0, 4, 0), 825), ((2, 0, 2, 2, 1, 2, 1), -4536), ((2, 0, 2, 2, 2, 0, 2), 8208), ((2, 0, 2, 3, 0, 1, 2), 5832), ((2, 0, 3, 0, 1, 4, 0), -900), ((2, 0, 3, 0, 2, 2, 1), 4816), ((2, 0, 3, 0, 3, 0, 2), -4352), ((2, 0, 3, 1, 0, 3, 1), -120), ((2, 0, 3, 1, 1, 1, 2), -5760), ((2, 0, 3, 2, 0, 0, 3), -8640), ((2, 0, 4, 0, 0, 2, 2), -192), ((2, 0, 4, 0, 1, 0, 3), 9216), ((2, 1, 0, 1, 4, 2, 0), -192), ((2, 1, 0, 1, 5, 0, 1), 768), ((2, 1, 0, 2, 2, 3, 0), 1020), ((2, 1, 0, 2, 3, 1, 1), -4464), ((2, 1, 0, 3, 0, 4, 0), -900), ((2, 1, 0, 3, 1, 2, 1), 3942), ((2, 1, 0, 3, 2, 0, 2), 5832), ((2, 1, 0, 4, 0, 1, 2), -6318), ((2, 1, 1, 0, 3, 3, 0), 160), ((2, 1, 1, 0, 4, 1, 1), -640), ((2, 1, 1, 1, 1, 4, 0), -2050), ((2, 1, 1, 1, 2, 2, 1), 10152), ((2, 1, 1, 1, 3, 0, 2), -5760), ((2, 1, 1, 2, 0, 3, 1), 1980), ((2, 1, 1, 2, 1, 1, 2), -22896), ((2, 1, 1, 3, 0, 0, 3), 21384), ((2, 1, 2, 0, 0, 5, 0), 2250), ((2, 1, 2, 0, 1, 3, 1), -13040), ((2, 1, 2, 0, 2, 1, 2), 15264), ((2, 1, 2, 1, 0, 2, 2), 16632), ((2, 1, 2, 1, 1, 0, 3), -3456), ((2, 1, 3, 0, 0, 1, 3), -21888), ((2, 2, 0, 0, 2, 4, 0), -50), ((2, 2, 0, 0, 3, 2, 1), 248), ((2, 2, 0, 0, 4, 0, 2), -192), ((2, 2, 0, 1, 0, 5, 0), 2000), ((2, 2, 0, 1, 1, 3, 1), -12330), ((2, 2, 0, 1, 2, 1, 2), 16632), ((2, 2, 0, 2, 0, 2, 2), 15417), ((2, 2, 0, 2, 1, 0, 3), -27540), ((2, 2, 1, 0, 0, 4, 1), -1700), ((2, 2, 1, 0, 1, 2, 2), 8748), ((2, 2, 1, 0, 2, 0, 3), -6480), ((2, 2, 1, 1, 0, 1, 3), -31320), ((2, 2, 2, 0, 0, 0, 4), 43200), ((2, 3, 0, 0, 0, 3, 2), 410), ((2, 3, 0, 0, 1, 1, 3), -1800), ((2, 3, 0, 1, 0, 0, 4), 27000), ((3, 0, 0, 0, 5, 2, 0), 256), ((3, 0, 0, 0, 6, 0, 1), -1024), ((3, 0, 0, 1, 3, 3, 0), -1600), ((3, 0, 0, 1, 4, 1, 1), 6912), ((3, 0, 0, 2, 1, 4, 0), 2250), ((3, 0, 0, 2, 2, 2, 1), -9720), ((3, 0, 0, 2, 3, 0, 2), -8640), ((3, 0, 0, 3, 0, 3, 1), -1350), ((3, 0, 0, 3, 1, 1, 2), 21384), ((3, 0, 0, 4, 0, 0, 3), -8748), ((3, 0, 1, 0, 2, 4, 0), 2000), ((3, 0, 1, 0, 3, 2, 1), -10560), ((3, 0, 1, 0, 4, 0, 2), 9216), ((3, 0, 1, 1, 0, 5, 0), -3750), ((3, 0, 1, 1, 1, 3, 1), 19800), ((3, 0, 1, 1, 2, 1, 2), -3456), ((3, 0, 1, 2, 0, 2, 2), -27540), ((3, 0, 1, 2, 1, 0, 3), 3888), ((3, 0, 2, 0, 0, 4, 1), 1500), ((3, 0, 2, 0, 1, 2, 2), -6480), ((3, 0, 2, 0, 2, 0, 3), -17280), ((3, 0, 2, 1, 0, 1, 3), 46656), ((3, 0, 3, 0, 0, 0, 4), -13824), ((3, 1, 0, 0, 1, 5, 0), -2500), ((3, 1, 0, 0, 2, 3, 1), 15600), ((3, 1, 0, 0, 3, 1, 2), -21888), ((3, 1, 0, 1, 0, 4, 1), 2250), ((3, 1, 0, 1, 1, 2, 2), -31320), ((3, 1, 0, 1, 2, 0, 3), 46656), ((3, 1, 0, 2, 0, 1, 3), 15552), ((3, 1, 1, 0, 0, 3, 2), -1800), ((3, 1, 1, 0, 1, 1, 3), 31968), ((3, 1, 1, 1, 0, 0, 4), -77760), ((3, 2, 0, 0, 0, 2, 3), 540), ((3, 2, 0, 0, 1, 0, 4), -32400), ((4, 0, 0, 0, 0, 6, 0), 3125), ((4, 0, 0, 0, 1, 4, 1), -22500), ((4, 0, 0, 0, 2, 2, 2), 43200), ((4, 0, 0, 0, 3, 0, 3), -13824), ((4, 0, 0, 1, 0, 3, 2), 27000), ((4, 0, 0, 1, 1, 1, 3), -77760), ((4, 0, 0, 2, 0, 0, 4), 34992), ((4, 0, 1, 0, 0, 2, 3), -32400), ((4, 0, 1, 0, 1, 0, 4), 62208), ((4, 1, 0, 0, 0, 1, 4), 38880), ((5, 0, 0, 0, 0, 0, 5), -46656)],
}

CONIC_SCALE = 9964518750000000000
CONIC = {
    (0, 0): [((0, 0, 1, 0), 98415000000000), ((1, 1, 0, 0), -17222625000000), ((3, 0, 0, 0), -369056250000)],
    (0, 1): [((0, 2, 0, 0), 145800000000), ((1, 0, 1, 0), -273375000000), ((2, 1, 0, 0), 51030000000), ((4, 0, 0, 0), 820125000)],
    (0, 2): [((0, 0, 0, 1), -2187000000000), ((0, 1, 1, 0), -9720000000), ((1, 2, 0, 0), 2511000000), ((2, 0, 1, 0), 729000000), ((3, 1, 0, 0), -141750000), ((5, 0, 0, 0), -1822500)],
    (1, 1): [((0, 0, 0, 1), -2187000000000), ((0, 1, 1, 0), -9720000000), ((1, 2, 0, 0), 2511000000), ((2, 0, 1, 0), 729000000), ((3, 1, 0, 0), -141750000), ((5, 0, 0, 0), -1822500)],
    (1, 2): [((0, 0, 2, 0), 162000000), ((0, 3, 0, 0), 10800000), ((1, 1, 1, 0), -70200000), ((2, 2, 0, 0), 8100000), ((3, 0, 1, 0), -1890000), ((4, 1, 0, 0), 378000), ((6, 0, 0, 0), 4050)],
    (2, 2): [((0, 1, 0, 1), -162000000), ((0, 2, 1, 0), -480000), ((1, 0, 2, 0), -450000), ((1, 3, 0, 0), 154000), ((2, 0, 0, 1), -8100000), ((2, 1, 1, 0), 162000), ((3, 2, 0, 0), -12800), ((4, 0, 1, 0), 4800), ((5, 1, 0, 0), -980), ((7, 0, 0, 0), -9)],
}

CUBIC_SCALE = 544810062656250000000000000000
CUBIC = {
    (0, 0, 0): [((0, 0, 0, 1), -239148450000000000000000), ((0, 1, 1, 0), -1594323000000000000000), ((1, 2, 0, 0), 345436650000000000000), ((2, 0, 1, 0), 94662928125000000000), ((3, 1, 0, 0), -16607531250000000000), ((5, 0, 0, 0), -224201671875000000)],
    (0, 0, 1): [((0, 0, 2, 0), 17714700000000000000), ((0, 3, 0, 0), 393660000000000000), ((1, 0, 0, 1), 332150625000000000000), ((1, 1, 1, 0), -4723920000000000000), ((2, 2, 0, 0), 189448875000000000), ((3, 0, 1, 0), -243577125000000000), ((4, 1, 0, 0), 44655806250000000), ((6, 0, 0, 0), 498225937500000)],
    (0, 0, 2): [((0, 1, 0, 1), -5904900000000000000), ((1, 0, 2, 0), -73811250000000000), ((1, 3, 0, 0), 1640250000000000), ((2, 0, 0, 1), -295245000000000000), ((2, 1, 1, 0), 27064125000000000), ((3, 2, 0, 0), -2542387500000000), ((4, 0, 1, 0), 615093750000000), ((5, 1, 0, 0), -116457750000000), ((7, 0, 0, 0), -1107168750000)],
    (0, 1, 1): [((0, 1, 0, 1), -5904900000000000000), ((1, 0, 2, 0), -73811250000000000), ((1, 3, 0, 0), 1640250000000000), ((2, 0, 0, 1), -295245000000000000), ((2, 1, 1, 0), 27064125000000000), ((3, 2, 0, 0), -2542387500000000), ((4, 0, 1, 0), 615093750000000), ((5, 1, 0, 0), -116457750000000), ((7, 0, 0, 0), -1107168750000)],
    (0, 1, 2): [((0, 0, 1, 1), -393660000000000000), ((0, 1, 2, 0), -1312200000000000), ((0, 4, 0, 0), 29160000000000), ((1, 1, 0, 1), 77091750000000000), ((1, 2, 1, 0), 568620000000000), ((2, 0, 2, 0), 221433750000000), ((2, 3, 0, 0), -60324750000000), ((3, 0, 0, 1), 1886287500000000), ((3, 1, 1, 0), -79278750000000), ((4, 2, 0, 0), 6706800000000), ((5, 0, 1, 0), -1530900000000), ((6, 1, 0, 0), 297067500000), ((8, 0, 0, 0), 2460375000)],
    (0, 2, 2): [((0, 0, 3, 0), 29160000000000), ((0, 2, 0, 1), -437400000000000), ((0, 3, 1, 0), 648000000000), ((1, 0, 1, 1), 546750000000000), ((1, 1, 2, 0), -17131500000000), ((1, 4, 0, 0), 35100000000), ((2, 1, 0, 1), -116640000000000), ((2, 2, 1, 0), 3353400000000), ((3, 0, 2, 0), -722925000000), ((3, 3, 0, 0), -224910000000), ((4, 0, 0, 1), -2004750000000), ((4, 1, 1, 0), 285727500000), ((5, 2, 0, 0), -28363500000), ((6, 0, 1, 0), 3766500000), ((7, 1, 0, 0), -745200000), ((9, 0, 0, 0), -5467500)],
    (1, 1, 1): [((0, 0, 1, 1), 196830000000000000), ((0, 1, 2, 0), 1312200000000000), ((0, 4, 0, 0), 87480000000000), ((1, 1, 0, 1), -26244000000000000), ((1, 2, 1, 0), -787320000000000), ((2, 0, 2, 0), 229635000000000), ((2, 3, 0, 0), 99144000000000), ((3, 0, 0, 1), -328050000000000), ((3, 1, 1, 0), -92947500000000), ((4, 2, 0, 0), 10351800000000), ((5, 0, 1, 0), -1530900000000), ((6, 1, 0, 0), 297067500000), ((8, 0, 0, 0), 2460375000)],
    (1, 1, 2): [((0, 0, 3, 0), -14580000000000), ((0, 2, 0, 1), -1312200000000000), ((0, 3, 1, 0), -6156000000000), ((1, 0, 1, 1), 2187000000000000), ((1, 1, 2, 0), 16767000000000), ((1, 4, 0, 0), 1549800000000), ((2, 1, 0, 1), -422820000000000), ((2, 2, 1, 0), -5103000000000), ((3, 0, 2, 0), -595350000000), ((3, 3, 0, 0), 463590000000), ((4, 0, 0, 1), -6925500000000), ((4, 1, 1, 0), 209790000000), ((5, 2, 0, 0), -17226000000), ((6, 0, 1, 0), 3766500000), ((7, 1, 0, 0), -745200000), ((9, 0, 0, 0), -5467500)],
    (1, 2, 2): [((0, 0, 0, 2), 13122000000000000), ((0, 1, 1, 1), 121500000000000), ((0, 2, 2, 0), 291600000000), ((0, 5, 0, 0), 2160000000), ((1, 2, 0, 1), -30780000000000), ((1, 3, 1, 0), -153360000000), ((2, 0, 1, 1), -8505000000000), ((2, 1, 2, 0), -31590000000), ((2, 4, 0, 0), 19854000000), ((3, 1, 0, 1), 1660500000000), ((3, 2, 1, 0), 14337000000), ((4, 0, 2, 0), 1741500000), ((4, 3, 0, 0), -1575000000), ((5, 0, 0, 1), 21465000000), ((5, 1, 1, 0), -622350000), ((6, 2, 0, 0), 50130000), ((7, 0, 1, 0), -9180000), ((8, 1, 0, 0), 1845000), ((10, 0, 0, 0), 12150)],
    (2, 2, 2): [((0, 0, 2, 1), -1620000000000), ((0, 1, 3, 0), -7560000000), ((0, 3, 0, 1), -97200000000), ((0, 4, 1, 0), -504000000), ((1, 1, 1, 1), 675000000000), ((1, 2, 2, 0), 5274000000), ((1, 5, 0, 0), 121200000), ((2, 0, 3, 0), 297000000), ((2, 2, 0, 1), -75780000000), ((2, 3, 1, 0), -1185000000), ((3, 0, 1, 1), 17550000000), ((3, 1, 2, 0), -126000000), ((3, 4, 0, 0), 88400000), ((4, 1, 0, 1), -3474000000), ((4, 2, 1, 0), 10800000), ((5, 0, 2, 0), -5310000), ((5, 3, 0, 0), 372000), ((6, 0, 0, 1), -36900000), ((6, 1, 1, 0), 2061000), ((7, 2, 0, 0), -192600), ((8, 0, 1, 0), 22200), ((9, 1, 0, 0), -4520), ((11, 0, 0, 0), -27)],
}

LOCUS_CONTENT = 83037656250000000000000000
EXTRA_INVOLUTION = [((0, 0, 0, 3), 125971200000), ((0, 0, 5, 0), -31104), ((0, 1, 1, 2), 2099520000), ((0, 2, 2, 1), 9331200), ((0, 3, 3, 0), 6912), ((0, 5, 0, 1), -41472), ((0, 6, 1, 0), -384), ((1, 0, 3, 1), 3499200), ((1, 1, 4, 0), 47952), ((1, 2, 0, 2), -507384000), ((1, 3, 1, 1), -4743360), ((1, 4, 2, 0), -6048), ((1, 7, 0, 0), 80), ((2, 0, 1, 2), -104976000), ((2, 1, 2, 1), -3090960), ((2, 2, 3, 0), -29376), ((2, 4, 0, 1), 592272), ((2, 5, 1, 0), 1728), ((3, 0, 4, 0), 81), ((3, 1, 0, 2), 19245600), ((3, 2, 1, 1), 870912), ((3, 3, 2, 0), 8910), ((3, 6, 0, 0), -159), ((4, 0, 2, 1), -8748), ((4, 1, 3, 0), -108), ((4, 3, 0, 1), -77436), ((4, 4, 1, 0), -1332), ((5, 0, 0, 2), 236196), ((5, 1, 1, 1), 5832), ((5, 2, 2, 0), 54), ((5, 5, 0, 0), 78), ((6, 2, 0, 1), -972), ((6, 3, 1, 0), -12), ((7, 4, 0, 0), 1)]
