multirank_report_v1_schema_string = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Multirank Profile Report v1",
    "description": "Structured output of the multirank profiler: flattening ranks per bipartition, verdict, policy and seed.",
    "type": "object",
    "required": ["dims", "policy", "seed", "profile", "levels"],
    "properties": {
        "dims": {
            "description": "Local dimension of each party, party 1 first.",
            "type": "array",
            "minItems": 2,
            "items": {"type": "integer", "minimum": 2},
        },
        "policy": {
            "description": "Rank policy in command line syntax.",
            "type": "string",
            "pattern": "^(exact|fast|mod:[0-9]+|generic:[0-9]+,[0-9]+)$",
        },
        "seed": {
            "description": "Master seed of the run.",
            "type": "integer",
            "minimum": 0,
        },
        "profile": {
            "description": "Ranks per computed level, complementary pairs included.",
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
            },
        },
        "levels": {
            "type": "array",
            "items": {"$ref": "#/definitions/Level"},
        },
        "verdict": {
            "oneOf": [{"type": "null"}, {"$ref": "#/definitions/Verdict"}],
        },
    },
    "additionalProperties": False,
    "definitions": {
        "Level": {
            "type": "object",
            "required": ["ell", "entries"],
            "properties": {
                "ell": {"type": "integer", "minimum": 1},
                "entries": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"$ref": "#/definitions/Entry"},
                },
            },
            "additionalProperties": False,
        },
        "Entry": {
            "type": "object",
            "required": [
                "label",
                "subset",
                "complement",
                "rank",
                "mode",
                "certainty",
            ],
            "properties": {
                "label": {"type": "string", "pattern": "^I=\\[[0-9]+(,[0-9]+)*\\]$"},
                "subset": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "integer", "minimum": 1},
                },
                "complement": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "integer", "minimum": 1},
                },
                "rank": {"type": "integer", "minimum": 0},
                "mode": {"enum": ["exact", "modular", "generic"]},
                "prime": {"type": ["integer", "null"]},
                "trials": {"type": ["integer", "null"], "minimum": 1},
                "certainty": {"enum": ["exact", "probabilistic"]},
                "failure_bound": {
                    "description": "Per-matrix failure probability bound as an exact fraction.",
                    "type": ["string", "null"],
                    "pattern": "^[0-9]+(/[0-9]+)?$",
                },
                "paired_with": {"type": ["string", "null"]},
                "matrix": {
                    "oneOf": [
                        {"type": "null"},
                        {
                            "type": "array",
                            "items": {"type": "array", "items": {"type": "string"}},
                        },
                    ]
                },
            },
            "additionalProperties": False,
        },
        "Verdict": {
            "type": "object",
            "required": ["gme", "fully_product", "product_cuts", "generic"],
            "properties": {
                "gme": {"type": "boolean"},
                "fully_product": {"type": "boolean"},
                "product_cuts": {"type": "array", "items": {"type": "string"}},
                "generic": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
    },
}
