"""Reference tables used by the test suite.

Bit strings may carry underscore grouping; the sequence parser strips
it. Every table entry is cross-checked by independent oracles in the
suite: generator outputs against the de Bruijn predicate, derivation
rows against the exhaustive round-trip check.
"""

# Order-4 seed feedback whose register output is (0000 1101 0010 1111).
SEED_H4 = "1 + x0 + x2*x3 + x1*x2*x3"
SEED_H4_CYCLE = "0000_1101_0010_1111"

# Family F1(6; h, 4): initial state -> canonical sequence.
F1_TABLE_6_4 = {
    "000011": "00000010_10010111_10000111_01100111_11101010_11011100_10001001_10001101",
    "000110": "00000010_10010111_10000110_01110110_00100011_11110101_01101110_01001101",
    "001101": "00000010_10010111_10000110_11001110_11100100_01001100_01111110_10101101",
    "011010": "00000010_10010111_10000110_10101100_11101101_11001000_10011000_11111101",
    "110100": "00000010_10100111_01100110_00111111_01011011_10010010_11110000_11010001",
    "101001": "00000010_11110000_11010011_10110011_00010001_11111010_10110111_00100101",
    "010010": "00000010_11110000_11010010_00100111_01100110_00111111_01010110_11100101",
    "100101": "00000010_11001110_11011100_10011000_11111101_01111000_01101001_01010001",
    "001011": "00000010_10000110_10010110_01110110_11100100_01001100_01111110_10101111",
    "010111": "00000010_10000110_10010111_01100111_00100010_01100011_11110101_01101111",
    "101111": "00000010_10000110_10010111_11101100_11101010_11011100_10001001_10001111",
    "011110": "00000010_10000110_10010111_10110011_10101011_01110010_00100110_00111111",
    "111100": "00000010_10000110_10010111_10011101_10010001_00110001_11111010_10110111",
    "111000": "00000010_10000110_10010111_10001000_11101100_11111101_01011011_10010011",
    "110000": "00000010_00101010_00011101_10011111_10101101_11001001_10001101_00101111",
    "100001": "00000011_10110011_11110101_10111001_00110001_10100101_11100001_00010101",
}

# Family F4(6): prefer-no output per product start index t, the value
# fed to the algorithm (t=1 coincides with prefer-one, t=5 with the
# opposite-preferring last-bit rule).
F4_TABLE_6 = {
    1: "00000011_11110111_10011101_01110001_10110100_11001011_00001010_10001001",
    2: "00000011_11011111_10011101_01110001_10110100_11001011_00001010_10001001",
    3: "00000011_10111001_11101011_11110001_10110100_11001011_00001010_10001001",
    4: "00000011_01101011_00110001_11011100_10111101_00111111_00001010_10001001",
    5: "00000010_10100101_10101110_10001001_10110010_00011000_11100111_10111111",
}

# Family F5(6): one canonical sequence per primitive polynomial.
F5_TABLE_6 = [
    (1, "11", "00000011_11110101_01101001_01000101_11011001_00110111_10011100_01100001"),
    (2, "111", "00000011_01010110_11111100_10010100_11110100_01000010_11100011_10110011"),
    (3, "1011", "00000010_10111001_00101101_00011011_00010000_11111101_01001100_11101111"),
    (3, "1101", "00000011_11011101_00100111_00010110_00010001_10010101_11111001_10110101"),
    (4, "10011", "00000010_11011100_11111101_00100110_10101111_00010000_11101100_10100011"),
    (4, "11001", "00000011_00010010_11111100_11110101_01100100_01110000_10100110_11101101"),
    (5, "100101", "00000011_10010001_00101100_11111100_01101110_10100001_01011110_11010011"),
    (5, "101001", "00000011_00101101_11101010_00101011_10110001_11111001_10100100_00100111"),
    (5, "101111", "00000011_01100111_10100101_01110001_01101010_00111011_11110010_01100001"),
    (5, "110111", "00000010_11101101_01001111_00011100_11011111_10100010_01010110_00011001"),
    (5, "111011", "00000010_01100011_01010010_00101111_11011001_11000011_11001010_11011101"),
    (5, "111101", "00000010_00110010_01111110_11100010_10110100_00111010_10010111_10011011"),
]

# Derivation table, order 3: sequence -> [(function, initial states)].
GPO3_TABLE = {
    "00010111": [
        ("x1*x2 + x1 + x2 + 1", ["010"]),
        ("x1 + 1", ["100", "001"]),
        ("x2 + 1", ["101"]),
        ("x2*x1 + 1", ["011", "110"]),
        ("x2*x1 + x2", ["000"]),
        ("1", ["111"]),
    ],
    "00011101": [
        ("x1*x2 + x1 + x2 + 1", ["100", "001"]),
        ("x2*x1 + x1 + 1", ["111"]),
        ("x1 + 1", ["011", "110"]),
        ("x2 + 1", ["010"]),
        ("x2*x1 + 1", ["101"]),
        ("0", ["000"]),
    ],
}

# Derivation table, order 4: all sixteen sequences.
GPO4_TABLE = {
    "0000111101100101": [
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2*x3 + x2 + x3 + 1", ["1000", "0001"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2 + 1", ["1100"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x3 + x1 + x2*x3 + x2 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x2 + x1 + x2*x3 + x2 + 1", ["1111"]),
        ("x1*x2 + x1 + x2 + 1", ["0011"]),
        ("x1*x3 + x1 + x2 + 1", ["0110"]),
        ("x1 + x2*x3 + x2 + 1", ["1101"]),
        ("x2*x3 + x2 + x3 + 1", ["0100"]),
        ("x1*x2 + x1*x3 + x3 + 1", ["0101"]),
        ("x1*x2*x3 + x1*x2 + x3 + 1", ["1010"]),
        ("x2 + 1", ["1001"]),
        ("0", ["0000"]),
    ],
    "0000101111010011": [
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x3 + x1 + x2 + x3 + 1", ["0100"]),
        ("x1*x2 + x1*x3 + x1 + x2*x3 + x3 + 1", ["1010"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2*x3 + x3 + 1", ["1101"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x1 + x2*x3 + x3 + 1", ["1111"]),
        ("x1*x2 + x1 + x2 + 1", ["1000", "0001"]),
        ("x1*x3 + x1 + x3 + 1", ["0101"]),
        ("x1 + x2*x3 + x3 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1 + x3 + 1", ["1011"]),
        ("x1*x2 + x2 + x3 + 1", ["1001"]),
        ("x1*x2 + x1*x3 + x2 + 1", ["0110"]),
        ("x1*x2*x3 + x1*x3 + x2 + 1", ["1100"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + x3", ["0000"]),
    ],
    "0000101001111011": [
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2*x3 + x2 + x3 + 1", ["0100"]),
        ("x1*x2 + x1 + x2*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2 + 1", ["1000", "0001"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x2 + 1", ["1101"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + x2 + 1", ["1111"]),
        ("x1*x3 + x1 + x3 + 1", ["1010"]),
        ("x1*x2*x3 + x1 + x3 + 1", ["0101"]),
        ("x2*x3 + x2 + x3 + 1", ["1001"]),
        ("x1*x2 + x2*x3 + x2 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x2 + x2 + 1", ["0110"]),
        ("x1*x3 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x3 + x2 + 1", ["0011"]),
        ("x2 + 1", ["1100"]),
        ("x2*x3 + x3", ["0000"]),
    ],
    "0000111101011001": [
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2*x3 + x2 + 1", ["1111"]),
        ("x1*x2 + x1 + x2*x3 + x2 + x3 + 1", ["1000", "0001"]),
        ("x1*x2 + x1*x3 + x1 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x1*x3 + x1 + x2*x3 + x2 + 1", ["1101"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2*x3 + 1", ["0110"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + x2 + x3 + 1", ["0100"]),
        ("x1 + x2*x3 + x2 + 1", ["1010"]),
        ("x1*x2 + x1*x3 + x1 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x2 + x1 + 1", ["0101"]),
        ("x1*x3 + x1 + x2*x3 + 1", ["1100"]),
        ("x1*x2 + x1*x3 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + 1", ["1001"]),
        ("x1*x2*x3 + x1*x3", ["0000"]),
    ],
    "0000110111100101": [
        ("x1*x2 + x1*x3 + x1 + x2 + x3 + 1", ["1000", "0001"]),
        ("x1*x2 + x1*x3 + x1 + x2*x3 + x2 + 1", ["1100"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2*x3 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x1*x3 + x1 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x3 + 1", ["0101"]),
        ("x1*x3 + x1 + x2*x3 + x2 + 1", ["1111"]),
        ("x1*x2 + x1 + x2 + 1", ["0110"]),
        ("x1*x3 + x1 + x2 + 1", ["1011"]),
        ("x1*x2*x3 + x1 + x2 + 1", ["1101"]),
        ("x1*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x2 + x3 + 1", ["0100"]),
        ("x1*x2*x3 + x2*x3 + x2 + 1", ["1001"]),
        ("x1*x2 + x2*x3 + x3 + 1", ["1010"]),
        ("x1*x2*x3 + x2*x3", ["0000"]),
    ],
    "0000101101001111": [
        ("x1*x2 + x1*x3 + x1 + x2 + x3 + 1", ["0010"]),
        ("x1*x3 + x1 + x2*x3 + x2 + x3 + 1", ["0100"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2*x3 + x2 + 1", ["1000", "0001"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x3 + 1", ["1010"]),
        ("x1*x2*x3 + x1*x3 + x1 + x2*x3 + x3 + 1", ["0101"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + x2 + x3 + 1", ["1001"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2 + x1*x3 + x2*x3 + x2 + 1", ["1111"]),
        ("x1*x2 + x1 + x3 + 1", ["1101"]),
        ("x1 + x2*x3 + x3 + 1", ["1011"]),
        ("x1*x2*x3 + x1 + x3 + 1", ["0110"]),
        ("x1*x2 + x1*x3 + x2 + 1", ["0011"]),
        ("x1*x3 + x2*x3 + x2 + 1", ["1100"]),
        ("x1*x3 + x3", ["0000"]),
    ],
    "0000101001101111": [
        ("x1*x2 + x1*x3 + x1 + x2 + x3 + 1", ["0100"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2 + x3 + 1", ["0010"]),
        ("x1*x2 + x1*x3 + x1 + x2*x3 + x2 + 1", ["1000", "0001"]),
        ("x1*x2*x3 + x1*x3 + x1 + x2*x3 + x3 + 1", ["1010"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + x2 + 1", ["1111"]),
        ("x1 + x2*x3 + x3 + 1", ["0101"]),
        ("x1*x2*x3 + x2 + x3 + 1", ["1001"]),
        ("x1*x2 + x1*x3 + x2 + 1", ["1101"]),
        ("x1*x2 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x2 + x2 + 1", ["1011"]),
        ("x1*x3 + x2*x3 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x1*x3 + x2 + 1", ["0110"]),
        ("x1*x2*x3 + x2*x3 + x2 + 1", ["1100"]),
        ("x1*x2*x3 + x3", ["0000"]),
    ],
    "0000100111101011": [
        ("x1*x2 + x1 + x2*x3 + x2 + x3 + 1", ["0100"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + x2 + x3 + 1", ["1001"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x2 + 1", ["1010"]),
        ("x1*x2*x3 + x1 + x3 + 1", ["0010"]),
        ("x1*x3 + x1 + x2*x3 + 1", ["1000", "0001"]),
        ("x1*x2 + x2*x3 + x2 + 1", ["1101"]),
        ("x1*x2*x3 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + 1", ["1100"]),
        ("x1*x2*x3 + x1*x2 + x2 + x3", ["0000"]),
        ("x2*x3 + x2 + 1", ["1111"]),
        ("x2 + 1", ["0011"]),
        ("x1*x3 + 1", ["0101"]),
        ("x2*x3 + 1", ["0110"]),
        ("x1*x2*x3 + 1", ["1011"]),
    ],
    "0000110101111001": [
        ("x1*x2*x3 + x1*x2 + x1 + x2 + x3 + 1", ["1000", "0001"]),
        ("x1*x2 + x1*x3 + x1 + x2*x3 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2 + 1", ["0110"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2*x3 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + 1", ["1111"]),
        ("x1*x3 + x1 + x2 + 1", ["1101"]),
        ("x1*x2*x3 + x1 + x2 + 1", ["1010"]),
        ("x1*x2 + x1*x3 + x1 + 1", ["0111", "1110"]),
        ("x1*x2 + x1 + x2*x3 + 1", ["0101"]),
        ("x1*x2*x3 + x1*x3 + x1 + 1", ["1100"]),
        ("x1*x3 + x2 + x3 + 1", ["0100"]),
        ("x1*x2 + 1", ["1001"]),
        ("x1*x3 + x2*x3", ["0000"]),
    ],
    "0000100110101111": [
        ("x1*x2*x3 + x1*x2 + x1 + x2 + x3 + 1", ["0100"]),
        ("x1 + x2*x3 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x3 + x1 + 1", ["1000", "0001"]),
        ("x1*x3 + x2 + x3 + 1", ["1001"]),
        ("x1*x2 + x1*x3 + x2 + 1", ["1010"]),
        ("x1*x2*x3 + x1*x2 + x2 + 1", ["1101"]),
        ("x1*x2*x3 + x2*x3 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + 1", ["0101"]),
        ("x1*x2 + x2*x3 + x2 + x3", ["0000"]),
        ("x2 + 1", ["0110"]),
        ("x1*x2 + 1", ["1100"]),
        ("x2*x3 + 1", ["1011"]),
        ("x1*x2*x3 + 1", ["0111", "1110"]),
        ("1", ["1111"]),
    ],
    "0000111100101101": [
        ("x1*x3 + x1 + x2*x3 + x2 + x3 + 1", ["1000", "0001"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2*x3 + x2 + 1", ["1100"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + x2 + x3 + 1", ["0100"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x3 + 1", ["1011"]),
        ("x1*x2*x3 + x1 + x2*x3 + x2 + 1", ["1111"]),
        ("x1 + x2*x3 + x2 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x3 + x2*x3 + x2 + 1", ["1001"]),
        ("x1*x2 + x1*x3 + x3 + 1", ["0110"]),
        ("x1*x2 + x2*x3 + x3 + 1", ["0101"]),
        ("x1*x2*x3 + x1*x3 + x3 + 1", ["1101"]),
        ("x3 + 1", ["1010"]),
        ("x1*x2*x3 + x1*x2", ["0000"]),
    ],
    "0000101111001101": [
        ("x1*x3 + x1 + x2*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x3 + 1", ["0101"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2*x3 + x3 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x3 + 1", ["1001"]),
        ("x1*x2 + x1 + x2*x3 + x3 + 1", ["1111"]),
        ("x1*x2*x3 + x1 + x2 + 1", ["1000", "0001"]),
        ("x1*x2 + x1 + x3 + 1", ["1011"]),
        ("x1 + x2*x3 + x3 + 1", ["1100"]),
        ("x1*x2 + x1*x3 + x2 + 1", ["0100"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + 1", ["0110"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + 1", ["1010"]),
        ("x1*x2 + x1*x3 + x2*x3 + x3", ["0000"]),
        ("x1*x2 + 1", ["0011"]),
        ("x2*x3 + 1", ["1101"]),
    ],
    "0000110010111101": [
        ("x1*x2*x3 + x1*x3 + x1 + x2 + x3 + 1", ["1000", "0001"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x3 + 1", ["0111", "1110"]),
        ("x1*x2 + x1*x3 + x2*x3 + x3 + 1", ["1111"]),
        ("x1*x2 + x1 + x2 + 1", ["1100"]),
        ("x1 + x2*x3 + x2 + 1", ["0011"]),
        ("x1*x2*x3 + x1 + x2 + 1", ["0110"]),
        ("x1*x2 + x2 + x3 + 1", ["0100"]),
        ("x2*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x3 + x2 + 1", ["1001"]),
        ("x1*x2 + x1*x3 + x3 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x2 + x3 + 1", ["0101"]),
        ("x1*x3 + x2*x3 + x3 + 1", ["1101"]),
        ("x1*x2*x3 + x2*x3 + x3 + 1", ["1010"]),
        ("x1*x2 + x2*x3", ["0000"]),
    ],
    "0000101100111101": [
        ("x1*x2*x3 + x1*x3 + x1 + x2 + x3 + 1", ["0010"]),
        ("x1*x2 + x1*x3 + x1 + x2*x3 + x3 + 1", ["0101"]),
        ("x1*x2*x3 + x1*x2 + x1 + x2*x3 + x3 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x2 + 1", ["0100"]),
        ("x1 + x2*x3 + x2 + 1", ["1000", "0001"]),
        ("x1*x2 + x1 + x3 + 1", ["0110"]),
        ("x1*x2*x3 + x1 + x3 + 1", ["1100"]),
        ("x1*x2 + x1*x3 + x3 + 1", ["1001"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + 1", ["0011"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x3", ["0000"]),
        ("x1*x2*x3 + x1*x2 + 1", ["1111"]),
        ("x1*x2 + 1", ["0111", "1110"]),
        ("x1*x3 + 1", ["1010"]),
        ("x1*x2*x3 + 1", ["1101"]),
    ],
    "0000110100101111": [
        ("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2*x3 + 1", ["1101"]),
        ("x1*x2*x3 + x1*x2 + x2*x3 + x2 + x3 + 1", ["0010"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x3 + 1", ["1100"]),
        ("x1*x2*x3 + x1*x3 + x2*x3 + x3 + 1", ["1111"]),
        ("x1*x2*x3 + x1 + x2 + 1", ["0100"]),
        ("x1 + x2*x3 + x3 + 1", ["1000", "0001"]),
        ("x1*x2 + x1 + x2*x3 + 1", ["1010"]),
        ("x1*x3 + x1 + x2*x3 + 1", ["0110"]),
        ("x1*x2*x3 + x1*x3 + x1 + 1", ["0011"]),
        ("x1*x2 + x1*x3 + x2 + 1", ["1001"]),
        ("x1*x3 + x2*x3 + x3 + 1", ["0111", "1110"]),
        ("x1*x2*x3 + x1*x3 + x3 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2", ["0000"]),
        ("x3 + 1", ["0101"]),
    ],
    "0000111101001011": [
        ("x1*x2*x3 + x1*x2 + x1*x3 + x2*x3 + x2 + 1", ["1001"]),
        ("x1 + x2*x3 + x2 + 1", ["0100"]),
        ("x1*x2*x3 + x1 + x3 + 1", ["1000", "0001"]),
        ("x1*x2 + x1*x3 + x1 + 1", ["1101"]),
        ("x1*x2*x3 + x1*x2 + x1 + 1", ["1010"]),
        ("x1*x3 + x1 + x2*x3 + 1", ["0011"]),
        ("x1*x2*x3 + x1*x3 + x1 + 1", ["0111", "1110"]),
        ("x1*x2 + x2 + x3 + 1", ["0010"]),
        ("x1*x2 + x1*x3 + x3 + 1", ["1100"]),
        ("x1*x3 + x2*x3 + x3 + 1", ["1011"]),
        ("x1*x2*x3 + x1*x3 + x3 + 1", ["0110"]),
        ("x1*x2*x3 + x2*x3 + x3 + 1", ["0101"]),
        ("x1*x2 + x1*x3 + x2*x3 + x2", ["0000"]),
        ("x1*x3 + x1 + 1", ["1111"]),
    ],
}

# Example visit lists: (feedback, initial, states in order, fallback-entered
# indices, forced-step indices).
VISIT_F2_EXAMPLE = {
    "f": "1 + x1*x2*x3",
    "b": "1110",
    "trace": [
        "1110", "1100", "1000", "0000", "0001", "0010", "0100", "1001",
        "0011", "0110", "1101", "1010", "0101", "1011", "0111", "1111",
    ],
    "gray": {4, 7, 8, 10, 12, 13, 14},
}
VISIT_F3_EXAMPLE = {
    "f": "1 + x1 + x3 + x1*x2 + x2*x3 + x1*x2*x3",
    "b": "1101",
    "trace": [
        "1101", "1010", "0100", "1001", "0011", "0110", "1100", "1000",
        "0000", "0001", "0010", "0101", "1011", "0111", "1111", "1110",
    ],
    "gray": {7, 9, 10, 11, 12, 13, 15},
}
VISIT_PREFER_NO_EXAMPLE = {
    "n": 4,
    "t": 2,
    "trace": [
        "0000", "0001", "0011", "0110", "1101", "1011", "0111", "1111",
        "1110", "1100", "1001", "0010", "0101", "1010", "0100", "1000",
    ],
    "gray": {6, 9, 11, 13, 14, 15},
    "forced": {7},
}
VISIT_SPECIAL_EXAMPLE = {
    "n": 4,
    "b": "1011",
    "trace": [
        "1011", "0110", "1100", "1000", "0000", "0001", "0011", "0111",
        "1111", "1110", "1101", "1010", "0100", "1001", "0010", "0101",
    ],
    "gray": {7, 9, 10, 13, 14, 15},
    "forced": {4},
}
