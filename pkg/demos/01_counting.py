"""Counting ascent sequences that avoid 021 plus one more pattern.

An ascent sequence starts at 0 and each letter is at most one more than
the number of ascents so far.  Avoiding 021 means the positive letters
are nondecreasing, and those sequences are counted by the Catalan
numbers; adding a length-4 pattern carves out 20 different counting
sequences, which this demo reproduces by exhaustive search.
"""

from ascentseq import ascent_sequences, avoiders, catalan, count_avoiders

print("All ascent sequences of length 3:")
for w in ascent_sequences(3):
    print("   ", "".join(map(str, w)))

print("\n021-avoiders are Catalan-counted:")
counts = count_avoiders("021", 10).counts
print("    found  :", counts)
print("    catalan:", tuple(catalan(n) for n in range(11)))

print("\nAdding one length-4 pattern (here 0010) thins the classes:")
cv = count_avoiders("021,0010", 11)
print("    b_n:", cv.counts)

print("\nThe 14 avoiders of {021, 0000} at length 4 (only 0000 is lost):")
for w in avoiders(4, "021,0000"):
    print("   ", "".join(map(str, w)))

print("\nSample of distinct counting sequences at n = 6..8:")
for name in ("0011", "0012", "1001", "1010", "1020", "1202"):
    row = count_avoiders(f"021,{name}", 8).counts[6:]
    print(f"    {name}: {row}")
