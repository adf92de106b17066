"""Root systems, Chevalley bases, minuscule modules and centralizers."""
