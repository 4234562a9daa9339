"""Reference matrices and strings with known overlap behaviour."""
from nonoverlap.matrices import BinaryMatrix

# overlapping pairs: horizontal, diagonal, vertical
HORIZONTAL_PAIR = (
    BinaryMatrix(("010101", "011101", "111100", "100011")),
    BinaryMatrix(("011110", "011110", "001000", "110101")),
)
DIAGONAL_PAIR = (
    BinaryMatrix(("010101", "011101", "111100", "100011")),
    BinaryMatrix(("100111", "011110", "111000", "010101")),
)
VERTICAL_PAIR = (
    BinaryMatrix(("010101", "011101", "111100", "100110")),
    BinaryMatrix(("111100", "100110", "111000", "110101")),
)

NON_OVERLAPPING_PAIR = (
    BinaryMatrix(("1100100100", "0110010110", "0100110010", "1111100000")),
    BinaryMatrix(("1100100100", "0010110110", "1101101010", "1110000000")),
)

# rows from V^{12,(3)} without the fixed top/bottom constraint
C_MATRIX = BinaryMatrix((
    "111010011000",
    "111011011000",
    "111011001000",
    "111010101000",
    "111010011000",
    "111001101000",
    "111001001000",
))
D_MATRIX = BinaryMatrix(("111011001000", "111010101000", "111010011000"))

# reference listing of V_13^(3) by length; the length-12 column repeats one line
V13_LISTING = {
    8: ["11101000"],
    9: ["111011000", "111001000"],
    10: ["1110101000", "1110011000"],
    11: ["11101101000", "11101001000", "11101011000", "11100101000"],
    12: [
        "111010011000", "111011011000", "111011001000", "111010101000",
        "111010011000", "111001101000", "111001001000",
    ],
    13: [
        "1110011011000", "1110010011000", "1110011001000", "1110010101000", "1110110011000",
        "1110110101000", "1110100101000", "1110101101000", "1110101011000", "1110101001000",
    ],
}
