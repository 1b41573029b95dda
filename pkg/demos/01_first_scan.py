"""
Scanning a text for gapped patterns
===================================

Two patterns, each a pair of strings separated by 1 to 2 arbitrary symbols.
"""
from gapmatch import Dictionary, GappedIndex, naive_scan, scan
from gapmatch.occurrence import format_tsv

dic = Dictionary.from_pairs([("ab", "cd"), ("a", "d")], alpha=1, beta=2)
text = b"abxcdxad"

# build once, query any number of texts
index = GappedIndex(dic)

# "ab", one symbol, "cd": pattern 1 ends at 4
# "a" then "d" at the end of the text sits right next to each other, gap 0 is too small
print(format_tsv(scan(index, text, "grid")), end="")

# the other backend and the brute-force matcher agree
assert scan(index, text, "lookup") == scan(index, text, "grid") == naive_scan(dic, text)

# every admissible gap instead of the smallest one
print(sorted(scan(index, b"axdxxd", "lookup", all_gaps=True)))
