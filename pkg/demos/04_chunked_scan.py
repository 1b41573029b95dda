"""
Scanning long texts in pieces
=============================

Two staggered series of pieces of length 2m cover every window of m symbols,
where m is the longest a match can be. Pieces are independent, so they can
go to a thread pool.
"""
import random
from concurrent.futures import ThreadPoolExecutor

from gapmatch import GappedIndex, scan, scan_chunked
from gapmatch.engine import plan_chunks
from gapmatch.generate import plant, random_dictionary, random_text

rng = random.Random(4)
dic = random_dictionary(rng, 50, 4, 1, 3, nested=True)
text = random_text(rng, 200_000, 4)
plant(rng, text, dic, 500)
text = bytes(text)

plan = plan_chunks(len(text), dic.max_span)
print(f"m = {plan.m}, {len(plan.chunks)} pieces, first few: {plan.chunks[:4]}")

index = GappedIndex(dic, backends=("lookup",))
with ThreadPoolExecutor(max_workers=4) as pool:
    pieces = scan_chunked(index, text, "lookup", map_fn=pool.map)
whole = scan(index, text, "lookup")
print(len(whole), "occurrences; identical:", pieces == whole)
