"""
JSON payloads for command results.

Every payload is made of dicts with string keys, lists, strings, integers,
booleans and None, so json.loads(dumps(payload)) == payload.
"""
import json

from nilmult.multiplier.structure import render_order, render_structure


def dumps(payload):
    """Deterministic JSON text."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def loads(text):
    return json.loads(text)


def order_payload(order):
    """FactoredOrder as [[prime, exponent], ...] plus its rendering."""
    return {
        "factors": [[p, e] for p, e in order.exponents],
        "text": str(order),
    }


def structure_payload(structure):
    """
    MultiplierStructure as JSON-native data.

    Args:
        structure (MultiplierStructure): Computed multiplier

    Returns:
        dict: summands, rank, order, primary multiset and rendered text
    """
    return {
        "text": render_structure(structure),
        "summands": [
            {"order": render_order(order), "multiplicity": multiplicity}
            for order, multiplicity in structure.factors
        ],
        "rank": structure.rank(),
        "order": order_payload(structure.order()),
        "primary": [[p, e, count] for (p, e), count in structure.primary_multiset()],
    }


def partition_payload(partition):
    return list(partition.parts)
