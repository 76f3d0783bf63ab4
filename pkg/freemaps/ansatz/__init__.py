"""The block-rotation ansatz F(x, z) = R(x) v(z) and its determinants."""
