# Semiring tags as they appear in files and on the command line
SEMIRING_TAGS = ("boolean", "fuzzy", "tropical", "nonneg")

# BMX header keyword
BMX_MAGIC = "bmx"
