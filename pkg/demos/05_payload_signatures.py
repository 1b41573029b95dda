"""
Byte signatures with a short wildcard
=====================================

Network signatures often read "prefix, a few unknown bytes, suffix". The
dictionary file format takes tab-separated halves with the gap bounds on the
header line.
"""
import io

from gapmatch import GappedIndex, parse_dictionary, scan

rules = b"""# alpha beta
1 4
GET /\tHTTP/1.
\x90\x90\x90\t\xcc
USER \tPASS
"""
dic = parse_dictionary(io.BytesIO(rules))
print(dic.d, "signatures, gap", dic.alpha, "to", dic.beta)

payload = b"GET /x HTTP/1.1\r\n....\x90\x90\x90AB\xcc...USER ab PASS"
index = GappedIndex(dic)
for occ in sorted(scan(index, payload)):
    print(occ, payload[occ.start:occ.end + 1])
