"""Published syndrome listings for the lookup tables.

Keys are Pauli strings in compact notation, values are syndromes with
generator 1 as the leftmost bit.
"""

FIVE_QUBIT_SYNDROMES = {
    "I": "0000",
    "X1": "1000", "X2": "1100", "X3": "0110", "X4": "0011", "X5": "0001", "Z1": "0101",
    "Z2": "0010", "Z3": "1001", "Z4": "0100", "Z5": "1010", "Y1": "1101", "Y2": "1110",
    "Y3": "1111", "Y4": "0111", "Y5": "1011",
}

SEVEN_QUBIT_SET1_SYNDROMES = {
    "I": "000000",
    "X1": "111000", "X2": "110000", "X3": "101000", "X4": "100000", "X5": "011000",
    "X6": "010000", "X7": "001000", "Y1": "111111", "Y2": "110110", "Y3": "101101",
    "Y4": "100100", "Y5": "011011", "Y6": "010010", "Y7": "001001", "Z1": "000111",
    "Z2": "000110", "Z3": "000101", "Z4": "000100", "Z5": "000011", "Z6": "000010",
    "Z7": "000001", "X1Z2": "111110", "X1Z3": "111101", "X1Z4": "111100",
    "X1Z5": "111011", "X1Z6": "111010", "X1Z7": "111001", "Z1X2": "110111",
    "X2Z3": "110101", "X2Z4": "110100", "X2Z5": "110011", "X2Z6": "110010",
    "X2Z7": "110001", "Z1X3": "101111", "Z2X3": "101110", "X3Z4": "101100",
    "X3Z5": "101011", "X3Z6": "101010", "X3Z7": "101001", "Z1X4": "100111",
    "Z2X4": "100110", "Z3X4": "100101", "X4Z5": "100011", "X4Z6": "100010",
    "X4Z7": "100001", "Z1X5": "011111", "Z2X5": "011110", "Z3X5": "011101",
    "Z4X5": "011100", "X5Z6": "011010", "X5Z7": "011001", "Z1X6": "010111",
    "Z2X6": "010110", "Z3X6": "010101", "Z4X6": "010100", "Z5X6": "010011",
    "X6Z7": "010001", "Z1X7": "001111", "Z2X7": "001110", "Z3X7": "001101",
    "Z4X7": "001100", "Z5X7": "001011", "Z6X7": "001010",
}
