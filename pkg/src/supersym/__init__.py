"""S_n decomposition of polynomial rings in commuting and Grassmann variables."""
