"""
Build and scan costs of the two backends
========================================

The range grid builds in O(d log d + |D|); the inter table in O(d^2 + |D|)
but answers each window position with a few array reads.
"""
import random
import time

from gapmatch import GappedIndex, scan
from gapmatch.engine import EngineStats
from gapmatch.generate import plant, random_dictionary, random_text

rng = random.Random(1)
text = random_text(rng, 10_000, 26)
for d in (64, 256, 1024):
    dic = random_dictionary(rng, d, 26, 1, 4)
    t = bytearray(text)
    plant(rng, t, dic, 200)
    t = bytes(t)
    for backend in ("grid", "lookup"):
        t0 = time.perf_counter()
        index = GappedIndex(dic, backends=(backend,))
        t1 = time.perf_counter()
        stats = EngineStats()
        occ = scan(index, t, backend, stats=stats)
        t2 = time.perf_counter()
        print(f"d={d:5} {backend:>6}: build {t1 - t0:6.3f}s scan {t2 - t1:6.3f}s "
              f"occ={len(occ)} intersections={stats.intersections}")
