"""Golden extraction fixtures.

Each entry: the text as it appears after document-to-text conversion, the
expected 5-tuples (sign, number, error, power-of-ten, canonical unit key),
the expected property phrase (normalized; None = no property asserted), and
the pattern expected to fire.
"""

GOLDEN_SNIPPETS = [
    # quantity-bearing snippets with their documented tuples
    {
        "text": "average gravity curvature ζ = (1.3999 ± 0.003) × 10-5 s-2m-1",
        "mqs": [(None, "1.3999", "0.003", -5, "s^-2.m^-1")],
        "property": "average gravity curvature",
        "pattern": "P1",
    },
    {
        "text": "12 °C melting point",
        "mqs": [(None, "12", None, None, "°C")],
        "property": "melting point",
        "pattern": "P2",
    },
    {
        "text": "distance from Earth to the Sun is 9.3 × 107 miles",
        "mqs": [(None, "9.3", None, 7, "miles")],
        "property": None,
        "pattern": None,
    },
    {
        "text": "average responsivity as low as 6.2 pA/K",
        "mqs": [(None, "6.2", None, None, "pA.K^-1")],
        "property": "average responsivity",
        "pattern": "P5",
    },
    {
        "text": "ζ = (1.3999 ± 0.003) × 10-5 s-2m-1",
        "mqs": [(None, "1.3999", "0.003", -5, "s^-2.m^-1")],
        "property": None,
        "pattern": None,
    },
    {
        "text": "a pixel pitch as high as roughly 352 µm",
        "mqs": [(None, "352", None, None, "um")],
        "property": "pixel pitch",
        "pattern": "P5",
    },
    {
        "text": "a 352 µm pixel pitch",
        "mqs": [(None, "352", None, None, "um")],
        "property": "pixel pitch",
        "pattern": "P2",
    },
    {
        "text": "The pixel pitch employed was 352 µm.",
        "mqs": [(None, "352", None, None, "um")],
        "property": "pixel pitch",
        "pattern": "P4",
    },
    {
        "text": "with 50 mL of 30% fuming sulfuric acid",
        "mqs": [(None, "50", None, None, "mL"), (None, "30", None, None, "%")],
        "property": "30% fuming sulfuric acid",
        "pattern": "P2",
    },
    {
        "text": "size ≅ 0.1 m2",
        "mqs": [(None, "0.1", None, None, "m^2")],
        "property": "size",
        "pattern": "P1",
    },
    {
        "text": "frequency of longitudinal scan was approximately 300 Hz.",
        "mqs": [(None, "300", None, None, "Hz")],
        "property": "frequency of longitudinal scan",
        "pattern": "P3",
    },
    {
        "text": "a nominal current density of 1.3 A/cm2 to 0.03 A/cm2",
        "mqs": [
            (None, "1.3", None, None, "A.cm^-2"),
            (None, "0.03", None, None, "A.cm^-2"),
        ],
        "property": "nominal current density",
        "pattern": "P5",
        "property_count": 2,
    },
    {
        "text": "panel strength lower than 8.90 ksi (61.4 MPa)",
        "mqs": [(None, "8.90", None, None, "ksi"), (None, "61.4", None, None, "MPa")],
        "property": "panel strength",
        "pattern": "P5",
        "property_count": 2,
    },
    {
        "text": "wavelengths at least 2.4 µm",
        "mqs": [(None, "2.4", None, None, "um")],
        "property": "wavelengths",
        "pattern": "P5",
    },
    {
        "text": "large fields of about, or above 10 kV/cm",
        "mqs": [(None, "10", None, None, "kV.cm^-1")],
        "property": "large fields",
        "pattern": "P5",
    },
    {
        "text": "gravity curvature ζ = 1.4×10-5 s-2m-1",
        "mqs": [(None, "1.4", None, -5, "s^-2.m^-1")],
        "property": "gravity curvature",
        "pattern": "P1",
    },
    {
        "text": "floor area ≈ 32 m2",
        "mqs": [(None, "32", None, None, "m^2")],
        "property": "floor area",
        "pattern": "P1",
    },
    {
        "text": "strength of panel was set to 9 ksi",
        "mqs": [(None, "9", None, None, "ksi")],
        "property": "strength of panel",
        "pattern": "P3",
    },
    {
        "text": "freq. of scans was roughly 300 Hz",
        "mqs": [(None, "300", None, None, "Hz")],
        "property": "freq. of scans",
        "pattern": "P3",
    },
    {
        "text": "panel strength was recorded at 9 ksi.",
        "mqs": [(None, "9", None, None, "ksi")],
        "property": "panel strength",
        "pattern": "P4",
    },
    {
        "text": "wavelengths of at least 2.4 µm",
        "mqs": [(None, "2.4", None, None, "um")],
        "property": "wavelengths",
        "pattern": "P5",
    },
    {
        "text": "panel strength (9 ksi)",
        "mqs": [(None, "9", None, None, "ksi")],
        "property": "panel strength",
        "pattern": "P5",
    },
]
