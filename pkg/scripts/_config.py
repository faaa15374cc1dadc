"""Tiny helper: expose dataclass fields as --flags."""

from __future__ import annotations

import argparse
import dataclasses


def parse_config(cls, description: str):
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return cls(**vars(parser.parse_args()))
