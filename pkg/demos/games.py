"""Ehrenfeucht-Fraisse games for FO2 with capped between counts."""

from betwixt import GameConfig, distinguishing_depth, equiv_k
from betwixt.games import equivalence_classes
from betwixt.words import Alphabet, enumerate_words

# ab and ba are separated in two rounds but not one
print("ab ~1 ba:", equiv_k("ab", "ba", GameConfig(1)))
print("ab ~2 ba:", equiv_k("ab", "ba", GameConfig(2)))

# counting between positions makes the game finer
for theta in [None, {"a": 2}, {"a": 3}]:
    k = distinguishing_depth("aaaaa", "aaaaaa", 4, theta)
    print("theta", theta, "separates a^5/a^6 at depth", k)

# the number of classes grows with the rounds
words = list(enumerate_words(Alphabet("ab"), 5))
for k in range(4):
    print(f"{k} rounds: {len(equivalence_classes(words, k))} classes over {len(words)} words")
