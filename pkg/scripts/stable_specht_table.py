"""Print stable Specht functions for every shape up to a given size, as LaTeX lines."""

import sys

from littlewood.complexes import stable_specht
from littlewood.emit import latex_partition, latex_symfunc
from littlewood.partitions import partitions_up_to

max_size = int(sys.argv[1]) if len(sys.argv) > 1 else 4
for lam in partitions_up_to(max_size):
    if lam:
        print(rf"s^\dagger_{{{latex_partition(lam)}}} &= {latex_symfunc(stable_specht(lam))} \\")
