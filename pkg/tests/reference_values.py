"""Published reference grids for the default (n, lambda) axes.

Values are stored exactly as printed in the source tabulations, as
strings, so tests can distinguish fixed-decimal from scientific cells
and honor each cell's own print precision.  parse() turns a cell into a
float; is_scientific() reports the notation used.

Three known blemishes in the published grids, each independently
cross-checked in this suite (dense-solve oracle, finite differences, and
the tables' own internal identities):

* VAR_B0_FULL column lambda=1 disagrees with every recomputation route
  and with its own large-n limit (56/57 = 0.98246 at lambda=1); see
  tests/test_acceptance.py::test_criterion_2.
* DERIV_B1_FULL holds several cells printed with only 2-3 significant
  digits.
* DERIV_COV_FULL column lambda=50 stops being exactly minus half of
  DERIV_B1_FULL for n >= 8, although the two quantities are related by
  exactly that factor.
"""

N_GRID = [3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50]
LAMBDA_GRID = [0.05, 0.1, 1.0, 5.0, 10.0, 50.0]


def parse(cell: str) -> float:
    return float(cell)


def is_scientific(cell: str) -> bool:
    return "E" in cell.upper()


RHO = {
    3: ["0.975310", "0.951229", "0.606531", "0.082085", "0.006738", "1.389E-11"],
    4: ["0.983471", "0.967216", "0.716531", "0.188876", "0.035674", "5.778E-08"],
    5: ["0.987578", "0.975310", "0.778801", "0.286505", "0.082085", "3.727E-06"],
    6: ["0.990050", "0.980199", "0.818731", "0.367879", "0.135335", "4.540E-05"],
    7: ["0.991701", "0.983471", "0.846482", "0.434598", "0.188876", "2.404E-04"],
    8: ["0.992883", "0.985816", "0.866878", "0.489542", "0.239651", "7.905E-04"],
    9: ["0.993769", "0.987578", "0.882497", "0.535261", "0.286505", "0.001930"],
    10: ["0.994460", "0.988950", "0.894839", "0.573753", "0.329193", "0.003866"],
    20: ["0.997372", "0.994751", "0.948730", "0.768621", "0.590778", "0.071965"],
    30: ["0.998277", "0.996558", "0.966105", "0.841631", "0.708343", "0.178327"],
    40: ["0.998719", "0.997439", "0.974685", "0.879673", "0.773824", "0.277468"],
    50: ["0.998980", "0.997961", "0.979799", "0.902993", "0.815396", "0.360448"],
}

VAR_B0_INTERCEPT = {
    3: ["0.975611", "0.952390", "0.671214", "0.370842", "0.336335", "0.333333"],
    4: ["0.975610", "0.952385", "0.668708", "0.328215", "0.263621", "0.250000"],
    5: ["0.975610", "0.952383", "0.667819", "0.310714", "0.227628", "0.200001"],
    6: ["0.975610", "0.952382", "0.667405", "0.302061", "0.207988", "0.166679"],
    7: ["0.975610", "0.952382", "0.667180", "0.297202", "0.196326", "0.142916"],
    8: ["0.975610", "0.952382", "0.667044", "0.294216", "0.188911", "0.125173"],
    9: ["0.975610", "0.952382", "0.666956", "0.292254", "0.183932", "0.111493"],
    10: ["0.975610", "0.952381", "0.666895", "0.290899", "0.180439", "0.100698"],
    20: ["0.975610", "0.952381", "0.666718", "0.286889", "0.169846", "0.057310"],
    30: ["0.975610", "0.952381", "0.666689", "0.286219", "0.168038", "0.047120"],
    40: ["0.975610", "0.952381", "0.666679", "0.285994", "0.167426", "0.043368"],
    50: ["0.975610", "0.952381", "0.666674", "0.285891", "0.167148", "0.041606"],
}

DERIV_B0_INTERCEPT = {
    3: ["-1.239E-06", "-9.444E-06", "-0.004467", "-0.068454", "-0.104086", "-0.111111"],
    4: ["-3.672E-07", "-2.799E-06", "-0.001350", "-0.025512", "-0.049299", "-0.062500"],
    5: ["-1.549E-07", "-1.181E-06", "-5.735E-04", "-0.011763", "-0.025791", "-0.039996"],
    6: ["-7.931E-08", "-6.046E-07", "-2.946E-04", "-0.006286", "-0.014778", "-0.027754"],
    7: ["-4.590E-08", "-3.499E-07", "-1.708E-04", "-0.003725", "-0.009128", "-0.020333"],
    8: ["-2.891E-08", "-2.204E-07", "-1.077E-04", "-0.002380", "-0.005988", "-0.015467"],
    9: ["-1.937E-08", "-1.476E-07", "-7.218E-05", "-0.001610", "-0.004122", "-0.012084"],
    10: ["-1.360E-08", "-1.037E-07", "-5.071E-05", "-0.001138", "-0.002950", "-0.009630"],
    20: ["-1.446E-09", "-1.102E-08", "-5.398E-06", "-1.233E-04", "-3.319E-04", "-0.001761"],
    30: ["-4.065E-10", "-3.099E-09", "-1.518E-06", "-3.478E-05", "-9.423E-05", "-5.649E-04"],
    40: ["-1.671E-10", "-1.274E-09", "-6.243E-07", "-1.432E-05", "-3.887E-05", "-2.438E-04"],
    50: ["-8.427E-11", "-6.425E-10", "-3.148E-07", "-7.222E-06", "-1.963E-05", "-1.258E-04"],
}

VAR_B1_SLOPE = {
    3: ["0.095162", "0.181269", "0.859514", "0.849233", "0.804292", "0.800000"],
    4: ["0.095162", "0.181269", "0.858241", "0.777936", "0.669011", "0.642857"],
    5: ["0.095162", "0.181269", "0.857769", "0.745931", "0.592750", "0.533336"],
    6: ["0.095162", "0.181269", "0.857546", "0.729559", "0.548762", "0.454575"],
    7: ["0.095162", "0.181269", "0.857424", "0.720210", "0.521888", "0.395751"],
    8: ["0.095162", "0.181269", "0.857350", "0.714409", "0.504517", "0.350443"],
    9: ["0.095162", "0.181269", "0.857302", "0.710577", "0.492732", "0.314724"],
    10: ["0.095162", "0.181269", "0.857268", "0.707918", "0.484406", "0.286066"],
    20: ["0.095162", "0.181269", "0.857171", "0.700006", "0.458873", "0.166823"],
    30: ["0.095162", "0.181269", "0.857155", "0.698677", "0.454473", "0.137909"],
    40: ["0.095162", "0.181269", "0.857150", "0.698229", "0.452981", "0.127180"],
    50: ["0.095162", "0.181269", "0.857147", "0.698026", "0.452303", "0.122124"],
}

DERIV_B1_SLOPE = {
    3: ["-3.537E-09", "-1.026E-07", "-0.002196", "-0.106494", "-0.174382", "-0.186667"],
    4: ["-1.113E-09", "-3.230E-08", "-7.082E-04", "-0.045541", "-0.100439", "-0.130102"],
    5: ["-4.790E-10", "-1.390E-08", "-3.075E-04", "-0.022015", "-0.056693", "-0.091844"],
    6: ["-2.475E-10", "-7.184E-09", "-1.595E-04", "-0.012023", "-0.033704", "-0.067436"],
    7: ["-1.440E-10", "-4.178E-09", "-9.298E-05", "-0.007209", "-0.021250", "-0.051252"],
    8: ["-9.093E-11", "-2.639E-09", "-5.880E-05", "-0.004639", "-0.014116", "-0.040001"],
    9: ["-6.103E-11", "-1.771E-09", "-3.950E-05", "-0.003152", "-0.009797", "-0.031849"],
    10: ["-4.292E-11", "-1.246E-09", "-2.780E-05", "-0.002235", "-0.007052", "-0.025749"],
    20: ["-4.579E-12", "-1.329E-10", "-2.971E-06", "-2.444E-04", "-8.065E-04", "-0.004967"],
    30: ["-1.289E-12", "-3.741E-11", "-8.362E-07", "-6.905E-05", "-2.296E-04", "-0.001612"],
    40: ["-5.302E-13", "-1.538E-11", "-3.439E-07", "-2.844E-05", "-9.481E-05", "-6.988E-04"],
    50: ["-2.673E-13", "-7.757E-12", "-1.734E-07", "-1.435E-05", "-4.789E-05", "-3.611E-04"],
}

VAR_B0_FULL = {
    3: ["0.999996", "0.999972", "0.997564", "0.867473", "0.836312", "0.833333"],
    4: ["0.999996", "0.999966", "0.997098", "0.805536", "0.721151", "0.700000"],
    5: ["0.999995", "0.999965", "0.996933", "0.777126", "0.652244", "0.600002"],
    6: ["0.999995", "0.999964", "0.996857", "0.762429", "0.611026", "0.523838"],
    7: ["0.999995", "0.999963", "0.996816", "0.753985", "0.585294", "0.464433"],
    8: ["0.999995", "0.999963", "0.996791", "0.748727", "0.568436", "0.417128"],
    9: ["0.999995", "0.999963", "0.996774", "0.745245", "0.556897", "0.378846"],
    10: ["0.999995", "0.999963", "0.996763", "0.742826", "0.548696", "0.347483"],
    20: ["0.999995", "0.999962", "0.996731", "0.735607", "0.523289", "0.210483"],
    30: ["0.999995", "0.999962", "0.996725", "0.734393", "0.518871", "0.175618"],
    40: ["0.999995", "0.999962", "0.996724", "0.733983", "0.517370", "0.162511"],
    50: ["0.999995", "0.999962", "0.996723", "0.733797", "0.516687", "0.156303"],
}

DERIV_B0_FULL = {
    3: ["-1.24E-06", "-9.45E-06", "-0.004664", "-0.091364", "-0.143621", "-0.152778"],
    4: ["-3.67E-07", "-2.80E-06", "-0.001433", "-0.040134", "-0.088705", "-0.115000"],
    5: ["-1.55E-07", "-1.18E-06", "-0.000612", "-0.019687", "-0.052415", "-0.086659"],
    6: ["-7.93E-08", "-6.05E-07", "-0.000315", "-0.010835", "-0.032008", "-0.066837"],
    7: ["-4.59E-08", "-3.50E-07", "-0.000183", "-0.006526", "-0.020514", "-0.052736"],
    8: ["-2.89E-08", "-2.21E-07", "-0.000115", "-0.004211", "-0.013771", "-0.042377"],
    9: ["-1.94E-08", "-1.48E-07", "-7.74E-05", "-0.002866", "-0.009626", "-0.034531"],
    10: ["-1.36E-08", "-1.04E-07", "-5.44E-05", "-0.002035", "-0.006963", "-0.028443"],
    20: ["-1.45E-09", "-1.10E-08", "-5.80E-06", "-0.000223", "-0.000809", "-0.005933"],
    30: ["-4.07E-10", "-3.10E-09", "-1.63E-06", "-6.32E-05", "-0.000231", "-0.001963"],
    40: ["-1.67E-10", "-1.28E-09", "-6.71E-07", "-2.60E-05", "-9.54E-05", "-0.000857"],
    50: ["-8.43E-11", "-6.43E-10", "-3.38E-07", "-1.31E-05", "-4.82E-05", "-0.000444"],
}

VAR_B1_FULL = {
    3: ["0.097541", "0.190325", "1.264241", "1.986524", "1.999909", "2.000000"],
    4: ["0.097541", "0.190325", "1.263713", "1.909284", "1.830120", "1.800000"],
    5: ["0.097541", "0.190325", "1.263485", "1.865650", "1.698465", "1.600005"],
    6: ["0.097541", "0.190325", "1.263372", "1.841470", "1.612151", "1.428636"],
    7: ["0.097541", "0.190325", "1.263308", "1.827130", "1.555872", "1.286067"],
    8: ["0.097541", "0.190325", "1.263269", "1.818044", "1.518102", "1.167820"],
    9: ["0.097541", "0.190325", "1.263243", "1.811964", "1.491863", "1.069413"],
    10: ["0.097541", "0.190325", "1.263226", "1.807709", "1.473030", "0.987139"],
    20: ["0.097541", "0.190325", "1.263173", "1.794875", "1.413771", "0.612691"],
    30: ["0.097541", "0.190325", "1.263164", "1.792695", "1.403331", "0.513992"],
    40: ["0.097541", "0.190325", "1.263162", "1.791959", "1.399776", "0.476572"],
    50: ["0.097541", "0.190325", "1.263160", "1.791624", "1.398158", "0.458790"],
}

DERIV_B1_FULL = {
    3: ["-6.20E-10", "-1.90E-08", "-0.000790", "-0.091640", "-0.158137", "-0.166667"],
    4: ["-2.50E-10", "-7.70E-09", "-0.000330", "-0.058488", "-0.157623", "-0.210000"],
    5: ["-1.20E-10", "-3.50E-09", "-0.000154", "-0.031696", "-0.106494", "-0.186651"],
    6: ["-6.20E-11", "-1.90E-09", "-8.20E-05", "-0.018197", "-0.068919", "-0.156329"],
    7: ["-3.70E-11", "-1.10E-09", "-4.90E-05", "-0.011203", "-0.045541", "-0.129609"],
    8: ["-2.30E-11", "-7.10E-10", "-3.10E-05", "-0.007323", "-0.031131", "-0.107641"],
    9: ["-1.60E-11", "-4.80E-10", "-2.10E-05", "-0.005026", "-0.022015", "-0.089788"],
    10: ["-1.10E-11", "-3.40E-10", "-1.50E-05", "-0.003589", "-0.016053", "-0.075254"],
    20: ["-1.20E-12", "-3.70E-11", "-1.60E-06", "-0.000400", "-0.001908", "-0.016689"],
    30: ["-3.40E-13", "-1.00E-11", "-4.50E-07", "-0.000113", "-0.000547", "-0.005590"],
    40: ["-1.40E-13", "-4.30E-12", "-1.90E-07", "-0.000047", "-0.000226", "-0.002451"],
    50: ["-7.00E-14", "-2.10E-12", "-9.40E-08", "-0.000024", "-0.000114", "-0.001274"],
}

COV_FULL = {
    3: ["-0.048771", "-0.095163", "-0.632121", "-0.993262", "-0.999955", "-1.000000"],
    4: ["-0.048771", "-0.095163", "-0.631856", "-0.954642", "-0.91506", "-0.900000"],
    5: ["-0.048771", "-0.095163", "-0.631742", "-0.932825", "-0.849233", "-0.800002"],
    6: ["-0.048771", "-0.095163", "-0.631686", "-0.920735", "-0.806075", "-0.714318"],
    7: ["-0.048771", "-0.095163", "-0.631654", "-0.913565", "-0.777936", "-0.643034"],
    8: ["-0.048771", "-0.095163", "-0.631634", "-0.909022", "-0.759051", "-0.583910"],
    9: ["-0.048771", "-0.095163", "-0.631622", "-0.905982", "-0.745931", "-0.534707"],
    10: ["-0.048771", "-0.095163", "-0.631613", "-0.903855", "-0.736515", "-0.493569"],
    20: ["-0.048771", "-0.095163", "-0.631587", "-0.897437", "-0.706886", "-0.306345"],
    30: ["-0.048771", "-0.095163", "-0.631582", "-0.896348", "-0.701665", "-0.256996"],
    40: ["-0.048771", "-0.095163", "-0.631581", "-0.895979", "-0.699888", "-0.238286"],
    50: ["-0.048771", "-0.095163", "-0.631580", "-0.895812", "-0.699079", "-0.229395"],
}

DERIV_COV_FULL = {
    3: ["3.10E-10", "9.43E-09", "0.000395", "0.045820", "0.079069", "0.083333"],
    4: ["1.26E-10", "3.83E-09", "0.000165", "0.029244", "0.078812", "0.105000"],
    5: ["5.81E-11", "1.77E-09", "7.70E-05", "0.015848", "0.053247", "0.093333"],
    6: ["3.09E-11", "9.42E-10", "4.12E-05", "0.009098", "0.034459", "0.078231"],
    7: ["1.83E-11", "5.56E-10", "2.44E-05", "0.005602", "0.022771", "0.065051"],
    8: ["1.16E-11", "3.55E-10", "1.56E-05", "0.003662", "0.015565", "0.054397"],
    9: ["7.86E-12", "2.40E-10", "1.05E-05", "0.002513", "0.011007", "0.045922"],
    10: ["5.55E-12", "1.69E-10", "7.43E-06", "0.001794", "0.008026", "0.039161"],
    20: ["5.99E-13", "1.83E-11", "8.04E-07", "0.000200", "0.000954", "0.011631"],
    30: ["1.69E-13", "5.15E-12", "2.27E-07", "5.67E-05", "0.000273", "0.004779"],
    40: ["6.95E-14", "2.12E-12", "9.33E-08", "2.34E-05", "0.000113", "0.002325"],
    50: ["3.51E-14", "1.07E-12", "4.71E-08", "1.18E-05", "5.72E-05", "0.001278"],
}
