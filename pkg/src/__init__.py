# Proper 2-equivalence classifier package