import numpy as np

RNG_SCHEME = "philox4x64/seedseq/v1"
SEED_MASK = (1 << 64) - 1


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    seq = np.random.SeedSequence(seed & SEED_MASK, spawn_key=(stream,))
    return np.random.Generator(np.random.Philox(seq))


def pick_index(rng: np.random.Generator, size: int) -> int:
    return int(rng.integers(size))
