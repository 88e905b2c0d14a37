"""Published counting rows shared across test modules.

OEIS tags: A151267 (A), A151284 (B), A151321 (C), A151256 (D), A151294 (E).
"""

from qkernel.models import ModelId

TABLE1 = {
    ModelId.A: [1, 1, 3, 7, 21, 55, 165, 457, 1371, 3909, 11727],
    ModelId.B: [1, 2, 6, 20, 70, 254, 942, 3550, 13532, 52030, 201386],
    ModelId.C: [1, 3, 13, 59, 279, 1341, 6527, 31995, 157659, 779601, 3864985],
    ModelId.D: [1, 1, 2, 4, 10, 23, 61, 153, 418, 1100, 3064],
    ModelId.E: [1, 2, 7, 24, 91, 339, 1316, 5064, 19876, 77655, 306653],
}
