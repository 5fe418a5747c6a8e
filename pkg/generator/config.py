class GeneratorConfig:

    # numpy bit generator behind every stream; PCG64 has a published reference
    # sequence and a stable output across platforms
    BIT_GENERATOR = "PCG64"

    MAX_SEED = 2**64 - 1
