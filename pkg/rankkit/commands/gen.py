"""`rankkit gen`: emit a seeded random band matrix as BMX."""

import argparse

from rankkit.adapters.bmx import emit_bmx
from rankkit.config.settings import RankkitSettings
from rankkit.service_layer.generator.services import generate
from rankkit.shared import SEMIRING_TAGS
from rankkit.shared.exceptions import EXIT_OK


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("gen", help="generate a random band matrix")
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--density", type=float, default=1.0)
    parser.add_argument("--semiring", choices=SEMIRING_TAGS, default="tropical")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, settings: RankkitSettings) -> int:
    matrix = generate(args.seed, args.n, args.k, args.density, args.semiring)
    print(emit_bmx(matrix), end="")
    return EXIT_OK
