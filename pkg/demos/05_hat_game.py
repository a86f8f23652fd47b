"""
The hat game
============

n players each wear one of k hat colors and see everyone else's hat.  They
guess simultaneously.  A marking is a strategy: player d looks up the line
through the others' hats in direction d and guesses the marked coordinate.
Then the number of correct guesses is exactly the mark count of the actual
hat assignment, so an [a,b] marking guarantees a or b correct guesses.
"""

import numpy as np

from linemark import Params, construct, hat_guess, hat_play, hat_play_many

m = construct(Params(3, 5, 1, 4))
hats = [2, 0, 1, 1, 0]
for i in range(5):
    print(f"player {i} sees {hats[:i] + hats[i + 1:]} and guesses {hat_guess(m, i, hats[:i] + hats[i + 1:])}"
          f" (wears {hats[i]})")
print("correct:", hat_play(m, hats))

rng = np.random.default_rng(0)
results = hat_play_many(m, rng.integers(0, 3, size=(100_000, 5)))
values, freq = np.unique(results, return_counts=True)
print("outcomes over 100000 random rounds:", dict(zip(values.tolist(), freq.tolist())))
