"""Independent brute-force filter evaluator and random tree generator.

The oracle interprets the JSON form of a filter (not the node classes),
against a plain merged property dict, so it shares no code with the
engine's evaluator.
"""

import random

KEYS = ["discipline", "material", "level", "zone", "status"]
VALUES = ["structural-steel", "piping", "Steel", "north", "L1", "l2", "done", ""]
OPS = ["equals", "contains", "prefix"]


def brute_eval(node: dict, props: dict) -> bool:
    kind, payload = next(iter(node.items()))
    if kind == "pred":
        value = props.get(payload["key"])
        if value is None:
            return False
        have = value.casefold()
        want = payload["value"].casefold()
        return {
            "equals": have == want,
            "contains": want in have,
            "prefix": have.startswith(want),
        }[payload["op"]]
    if kind == "and":
        result = True
        for child in payload:
            result = result and brute_eval(child, props)
        return result
    if kind == "or":
        result = False
        for child in payload:
            result = result or brute_eval(child, props)
        return result
    return not brute_eval(payload, props)


def random_expr_json(rng: random.Random, depth: int) -> dict:
    if depth <= 0 or rng.random() < 0.4:
        return {
            "pred": {
                "key": rng.choice(KEYS + ["name", "id"]),
                "op": rng.choice(OPS),
                "value": rng.choice(VALUES),
            }
        }
    kind = rng.choice(["and", "or", "not"])
    if kind == "not":
        return {"not": random_expr_json(rng, depth - 1)}
    width = rng.randint(1, 3)
    return {kind: [random_expr_json(rng, depth - 1) for _ in range(width)]}


def random_properties(rng: random.Random) -> dict:
    props = {}
    for key in KEYS:
        if rng.random() < 0.6:
            props[key] = rng.choice(VALUES)
    return props
