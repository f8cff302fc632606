// Generated by tests/oracles/ei_series.py; do not edit.
// (x, Ei(x)) for x = -10^u, u evenly spaced over [-6, 2].
pub const EI_TABLE: [(f64, f64); 50] = [
    (-1e-06, -13.23829589306249),
    (-1.4563484775012437e-06, -12.862364089330027),
    (-2.1209508879201907e-06, -12.486432493851183),
    (-3.088843596477481e-06, -12.110501201661972),
    (-4.498432668969446e-06, -11.73457035116771),
    (-6.551285568595509e-06, -11.358640143934277),
    (-9.54095476349994e-06, -10.982710873510785),
    (-1.3894954943731376e-05, -10.606782967404794),
    (-2.023589647725157e-05, -10.230857048211561),
    (-2.9470517025518106e-05, -9.854934022636696),
    (-4.291934260128778e-05, -9.479015211138224),
    (-6.250551925273974e-05, -9.103102536718007),
    (-9.102981779915218e-05, -8.72719879984105),
    (-0.0001325711365590109, -8.351308078757066),
    (-0.000193069772888325, -7.975436312387798),
    (-0.00028117686979742306, -7.599592148958758),
    (-0.00040949150623804253, -7.223788181361402),
    (-0.0005963623316594643, -6.848042745122946),
    (-0.0008685113737513527, -6.472382534442992),
    (-0.0012648552168552961, -6.096846406894762),
    (-0.0018420699693267161, -5.721490913460547),
    (-0.002682695795279726, -5.346398329022038),
    (-0.003906939937054617, -4.971688298491045),
    (-0.0056898660290182965, -4.597534693815525),
    (-0.008286427728546843, -4.224189944195629),
    (-0.012067926406393287, -3.852020006159657),
    (-0.01757510624854792, -3.481554316726222),
    (-0.025595479226995357, -3.113556495094021),
    (-0.0372759372031494, -2.7491230316276303),
    (-0.0542867543932386, -2.389818140605175),
    (-0.079060432109077, -2.0378519368529786),
    (-0.11513953993264474, -1.6963030955335394),
    (-0.16768329368110083, -1.3693703598861042),
    (-0.2442053094548651, -1.0625999972346551),
    (-0.35564803062231287, -0.7829662121510617),
    (-0.5179474679231211, -0.5385735356462116),
    (-0.7543120063354617, -0.33763861792990957),
    (-1.0985411419875584, -0.1864329851317122),
    (-1.599858719606058, -0.08632616325639403),
    (-2.329951810515372, -0.031224264799085803),
    (-3.3932217718953286, -0.0079577990464828),
    (-4.941713361323835, -0.0012296560384529576),
    (-7.19685673001152, -9.251463442795525e-05),
    (-10.481131341546858, -2.4603112460089374e-06),
    (-15.264179671752334, -1.4491044322433012e-08),
    (-22.22996482526195, -9.55754658917683e-12),
    (-32.37457542817644, -2.611282893426389e-16),
    (-47.148663634573936, -6.937316248005338e-23),
    (-68.66488450043, -2.1691655737466333e-32),
    (-100.0, -3.683597761682032e-46),
];
