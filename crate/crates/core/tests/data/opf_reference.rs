// Reference clusterings produced offline with opfython 1.0.15
// (UnsupervisedOPF, squared Euclidean arcs, one run per fixed k).

pub struct Case {
    pub samples: &'static [[f64; 3]],
    /// (k, normalized cut, partition) for every k in [1, ceil(sqrt(N))].
    pub per_k: &'static [(usize, f64, &'static [usize])],
    pub best_k: usize,
}

pub const CASES: &[Case] = &[
    Case {
        samples: &[
            [0.12857020276919962, 0.49927786244011496, 0.6014983576233575],
            [0.028689008371944547, 0.14792608457745593, 0.9282110229603695],
            [0.07042057615419683, 0.12977394939929798, 0.9483284532917751],
            [0.6218835927963828, 0.368993123729791, 0.5113900218032627],
            [0.6628429525167993, 0.2753088157611293, 0.13796807286695534],
            [0.7880395945039919, 0.6703605841024838, 0.5123823134831604],
            [0.8167364359696581, 0.5490752688700263, 0.9809136392973055],
            [0.20450946133004488, 0.5537303628652278, 0.4836246969233877],
            [0.3532748550604481, 0.5915953039490435, 0.23530123166758055],
            [0.8022026837784835, 0.8673335518424147, 0.12875967122785104],
            [0.46707320673827113, 0.27714489253370433, 0.08311699773524239],
            [0.8959443082503675, 0.42994869204783537, 0.14769129996209407],
            [0.6733623572759108, 0.20221602778803816, 0.901431078688177],
            [0.21714825741852817, 0.03307468737742869, 0.20076895416121932],
            [0.34574787375563953, 0.46890816342248465, 0.9061343388955606],
            [0.6973610887362978, 0.33932066074244527, 0.016877215097497844],
            [0.15982369410498098, 0.9964358755396705, 0.4597159798931846],
            [0.6910399163187593, 0.054668061401838, 0.034050278947037604],
            [0.8458901064450575, 0.5878819406668605, 0.308709743204562],
            [0.31737663828133744, 0.08923725441774877, 0.17266960110857543],
            [0.024586107465186302, 0.8391248483727817, 0.46630319720316515],
            [0.1272029160585304, 0.739246874033692, 0.19565282994532096],
            [0.061920235148452574, 0.5983921073240381, 0.8957577517412816],
            [0.026943411384702798, 0.8051359898916692, 0.19017001672834077],
            [0.09290142163654713, 0.017962035652556163, 0.292975067012086],
            [0.7271117439819181, 0.49317895100811693, 0.8529199944545277],
            [0.21721130352149032, 0.31518274714343164, 0.25814085185458835],
            [0.978301137314217, 0.9410059946514349, 0.34068617585650907],
            [0.43600150359233103, 0.3143196287038529, 0.7465089173054106],
            [0.04001310255319024, 0.06743893309202609, 0.40403758746840623],
        ],
        per_k: &[
            (1, 8.0, &[0, 1, 1, 2, 3, 4, 5, 0, 6, 7, 8, 9, 10, 11, 12, 3, 13, 14, 4, 11, 13, 15, 16, 15, 17, 5, 18, 7, 12, 17]),
            (2, 3.563730947374966, &[0, 1, 1, 2, 3, 4, 5, 0, 6, 7, 3, 4, 5, 8, 1, 3, 6, 9, 4, 8, 6, 6, 0, 6, 8, 5, 10, 7, 2, 8]),
            (3, 0.7078408574035041, &[0, 1, 1, 1, 2, 2, 3, 0, 4, 2, 2, 2, 3, 5, 1, 2, 4, 2, 2, 5, 4, 4, 1, 4, 5, 3, 5, 2, 1, 5]),
            (4, 0.8697934812754036, &[0, 1, 1, 2, 3, 2, 4, 0, 0, 2, 3, 3, 4, 5, 0, 3, 0, 3, 2, 5, 0, 0, 0, 0, 5, 4, 5, 2, 4, 5]),
            (5, 0.60932557784795, &[0, 1, 1, 2, 2, 2, 3, 0, 0, 2, 4, 2, 3, 4, 3, 2, 0, 2, 2, 4, 0, 0, 0, 0, 4, 3, 4, 2, 3, 4]),
            (6, 2.0741698223487335, &[0, 1, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2, 0, 3, 0, 0, 0, 3, 3, 0, 3, 0, 2, 0, 0, 0, 0]),
        ],
        best_k: 5,
    },
    Case {
        samples: &[
            [0.2508244581084461, 0.9467529428594246, 0.1893203845397613],
            [0.1792914104181076, 0.3498892405959575, 0.23054124658990593],
            [0.6704457427727847, 0.11507938212344748, 0.8963093737046804],
            [0.8581304890839089, 0.00282703218662006, 0.5414661617187942],
            [0.10685127402373995, 0.2579549587609903, 0.4168960406331027],
            [0.4536161218532765, 0.46814659094390065, 0.9275167008723263],
            [0.25877108942215044, 0.18789021078453794, 0.6705104740545001],
            [0.9466187033519777, 0.9228108754437514, 0.8802499999234736],
            [0.06435569592361479, 0.9366961249291337, 0.6492403690544754],
            [0.8715558455252963, 0.40809846805598426, 0.2193899345083382],
            [0.7929700768946931, 0.6616344709917836, 0.7788400920220722],
            [0.2013446979017698, 0.13435173729839256, 0.7636250896376714],
            [0.02022872371008655, 0.945600681298606, 0.13508786250926552],
            [0.600110285529601, 0.41900704801146815, 0.3238950521340761],
            [0.1702462715636046, 0.7803828012931048, 0.9145245872555922],
            [0.7288713818612068, 0.6002847875670536, 0.7114538702985889],
            [0.5360886065111569, 0.5582653418029639, 0.9060838701495761],
            [0.2826404105443283, 0.22221389829092197, 0.9469682047271869],
            [0.9431166765213789, 0.4759971273125235, 0.8007780011081042],
            [0.7432499753364007, 0.9492661211569702, 0.08170328926167814],
            [0.8981571975086791, 0.500123847667957, 0.44896338157321436],
            [0.6867601140293602, 0.6164768219402089, 0.4365363219561684],
            [0.2911071485409982, 0.9186639262189912, 0.8188105567349625],
            [0.10246358147517898, 0.4044728372039633, 0.7634021637802205],
            [0.8790593464783144, 0.9622294289531313, 0.24072088933422342],
            [0.8917368501350286, 0.6948705636882677, 0.06820318195833397],
            [0.21062884265649628, 0.18869198626736416, 0.07739050178778328],
            [0.687409975428238, 0.3101406783515913, 0.6917732643122774],
            [0.08170851244184019, 0.8712098784014853, 0.6955731437019083],
            [0.782163449156505, 0.6064479200345143, 0.4577256148378832],
        ],
        per_k: &[
            (1, 10.0, &[0, 1, 2, 3, 1, 4, 5, 6, 7, 8, 9, 5, 0, 10, 11, 9, 4, 12, 13, 14, 15, 16, 11, 17, 14, 18, 19, 2, 7, 16]),
            (2, 4.509241655917254, &[0, 1, 2, 3, 1, 4, 5, 6, 7, 8, 9, 5, 0, 8, 7, 9, 4, 5, 9, 10, 11, 11, 7, 12, 10, 10, 1, 2, 7, 11]),
            (3, 2.701926314574775, &[0, 1, 2, 3, 1, 2, 4, 5, 6, 2, 2, 4, 0, 2, 6, 2, 2, 4, 2, 7, 2, 2, 6, 4, 7, 7, 1, 2, 6, 2]),
            (4, 0.5896647771242628, &[0, 1, 2, 2, 1, 2, 1, 2, 0, 2, 2, 1, 0, 2, 0, 2, 2, 1, 2, 3, 2, 2, 0, 1, 3, 2, 1, 2, 0, 2]),
            (5, 0.3434846454852951, &[0, 1, 1, 1, 1, 1, 1, 2, 0, 2, 2, 1, 0, 2, 0, 2, 2, 1, 2, 2, 2, 2, 0, 1, 2, 2, 1, 2, 0, 2]),
            (6, 0.620331878449592, &[0, 1, 2, 2, 2, 2, 2, 1, 0, 1, 1, 2, 0, 1, 1, 1, 1, 2, 1, 1, 1, 1, 0, 2, 1, 1, 2, 1, 0, 1]),
        ],
        best_k: 5,
    },
    Case {
        samples: &[
            [0.8647975870165865, 0.855302514932059, 0.8110233987843422],
            [0.2614463614164766, 0.0771994577184214, 0.9464657804460633],
            [0.6137916910471019, 0.00263075362629972, 0.9104071780658378],
            [0.9848034752375554, 0.2862966041661704, 0.8136611230389795],
            [0.08240794388130823, 0.4382800473034214, 0.8177037747448075],
            [0.40873333268977363, 0.5177497071869771, 0.11703988347506633],
            [0.8140065192501118, 0.4978674083325122, 0.24827919488667194],
            [0.7766861560008684, 0.9792282891895626, 0.53834323407629],
            [0.7371502226207836, 0.9927606888483627, 0.03012749637532397],
            [0.5989776523667713, 0.9672952777915866, 0.11733657384331686],
            [0.2231014949939203, 0.5502283889833729, 0.722327310719796],
            [0.5527524153948293, 0.5477017956423661, 0.0515388294743615],
            [0.7392297121947433, 0.32070150992281876, 0.07396187379140517],
            [0.9584683194126471, 0.6596713208492915, 0.45578296007926533],
            [0.7326514668471766, 0.4778900309019434, 0.12472133330591129],
            [0.6045798880373442, 0.7469364245619166, 0.7441468288332692],
            [0.5515674012638448, 0.9284915198370209, 0.9457125619000804],
            [0.8748696622696762, 0.3716436351591228, 0.2677700742588114],
            [0.5298119827496722, 0.6543102125920736, 0.1605932683017619],
            [0.5594645356105491, 0.4389482531021668, 0.0016647948525158052],
            [0.41882978512031743, 0.3998988932189942, 0.9633892562820303],
            [0.054514811423870047, 0.9285460335053835, 0.9083194924222268],
            [0.5998002500769789, 0.1872290474547189, 0.7913043338720918],
            [0.16152169054797472, 0.3206403846444068, 0.6664230870814164],
            [0.4252353008413222, 0.4609252157924165, 0.30315722537378154],
            [0.03723728048946706, 0.3607681347214251, 0.8266223901229942],
            [0.8301617250714785, 0.08106201414430547, 0.5529808291772408],
            [0.35379305429085994, 0.39895884700342044, 0.9878944722755058],
            [0.8092349746949816, 0.506979159656347, 0.5074810993396169],
            [0.9169820251078087, 0.3751431315727951, 0.7819015932890875],
        ],
        per_k: &[
            (1, 12.0, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 8, 9, 10, 11, 12, 13, 14, 14, 6, 15, 10, 16, 17, 2, 18, 19, 4, 20, 16, 12, 3]),
            (2, 2.393966235504206, &[0, 1, 1, 2, 3, 4, 5, 0, 6, 6, 3, 4, 5, 2, 5, 0, 0, 5, 4, 4, 1, 7, 1, 3, 8, 3, 2, 1, 2, 2]),
            (3, 1.6840737021217942, &[0, 1, 1, 2, 3, 4, 5, 0, 6, 6, 3, 4, 5, 5, 5, 0, 0, 5, 4, 4, 1, 7, 1, 3, 4, 3, 2, 1, 5, 2]),
            (4, 0.7540747606628975, &[0, 1, 1, 2, 1, 2, 2, 2, 3, 3, 1, 2, 2, 2, 2, 0, 0, 2, 2, 2, 1, 0, 1, 1, 2, 1, 2, 1, 2, 2]),
            (5, 1.0471401221851777, &[0, 1, 1, 0, 1, 0, 0, 0, 2, 2, 1, 0, 0, 0, 0, 3, 3, 0, 0, 0, 1, 3, 1, 1, 0, 1, 0, 1, 0, 0]),
            (6, 0.08985801721293644, &[0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0]),
        ],
        best_k: 6,
    },
    Case {
        samples: &[
            [0.8309833188891115, 0.3609466668342566, 0.7027393055820549],
            [0.8601187866525944, 0.6413174807881646, 0.5483632088133139],
            [0.7623134225311933, 0.7163143826400404, 0.467168753910852],
            [0.572458938182647, 0.7463223600913117, 0.0635639191391969],
            [0.646876042708874, 0.7360571428957442, 0.39875884512794135],
            [0.5071825303221235, 0.228720627763624, 0.6501941808471887],
            [0.9712842642006733, 0.2987130847246813, 0.46283078928443355],
            [0.8916139000238108, 0.5514008772975039, 0.4214647401126298],
            [0.6682907458007323, 0.030820231403132725, 0.15379641788591292],
            [0.8713233843507495, 0.1582398440984195, 0.02946683882092549],
            [0.9263955373023389, 0.7527850570897252, 0.9774307284513867],
            [0.7597189519884036, 0.922808375888759, 0.3444134446915801],
            [0.7546326212128582, 0.16440838099209276, 0.823890111667126],
            [0.7323120281686404, 0.19133196801197838, 0.18396720518427812],
            [0.16870381610230667, 0.8188733824372006, 0.6643253697797494],
            [0.28081760154361113, 0.6544226694688049, 0.6860216196502422],
            [0.6888824214249193, 0.9959668729826651, 0.8449636959941323],
            [0.4299854645718363, 0.04706780419635681, 0.22859525161476568],
            [0.07480665770514139, 0.7844507121186743, 0.7933319921004229],
            [0.21426724784613993, 0.9484711055139605, 0.323091117663703],
            [0.4659160677931732, 0.5809500179597656, 0.9979741577789906],
            [0.8968777338638636, 0.14431559434524766, 0.8934891643106165],
            [0.2031909126809499, 0.8029993573408467, 0.671471589617775],
            [0.1515926346624431, 0.053563016320574364, 0.929429583911057],
            [0.004892976338525146, 0.14765862303663024, 0.9744904292693193],
            [0.6969802274993602, 0.5641765789829313, 0.45365380447205494],
            [0.5722572536614859, 0.46275373250353824, 0.06608400806557335],
            [0.23045599122270166, 0.3139259032252002, 0.49619462300056394],
            [0.3934945443576805, 0.7216498989723805, 0.8032961565137803],
            [0.7684827016122366, 0.4608800993114138, 0.3924227033791393],
        ],
        per_k: &[
            (1, 14.0, &[0, 1, 2, 3, 2, 4, 5, 6, 7, 8, 9, 10, 11, 7, 12, 13, 9, 14, 15, 16, 17, 11, 12, 18, 18, 19, 3, 20, 21, 19]),
            (2, 4.710314741334899, &[0, 1, 1, 2, 1, 3, 0, 4, 5, 5, 6, 7, 0, 5, 8, 8, 6, 5, 8, 9, 10, 0, 8, 3, 3, 4, 2, 3, 8, 4]),
            (3, 2.051674183728732, &[0, 1, 1, 2, 1, 0, 0, 1, 2, 2, 3, 1, 0, 2, 4, 4, 3, 2, 4, 5, 4, 0, 4, 6, 6, 1, 2, 2, 4, 1]),
            (4, 2.281969827030328, &[0, 1, 1, 2, 1, 0, 0, 1, 2, 2, 3, 1, 0, 2, 4, 4, 3, 2, 4, 5, 4, 0, 4, 6, 6, 1, 2, 0, 4, 1]),
            (5, 1.8133292487148214, &[0, 1, 1, 1, 1, 0, 1, 1, 2, 2, 3, 1, 0, 2, 3, 3, 4, 2, 3, 3, 3, 0, 3, 5, 5, 1, 2, 0, 3, 1]),
            (6, 0.6090653221644027, &[0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 0, 0, 1, 2, 2, 2, 1, 2, 2, 2, 0, 2, 3, 3, 0, 1, 2, 2, 0]),
        ],
        best_k: 6,
    },
    Case {
        samples: &[
            [0.6927433679651523, 0.8158171113360575, 0.3444067577928567],
            [0.04483817569041881, 0.571597257033731, 0.14624542672359753],
            [0.7187713768754712, 0.34535650407583973, 0.4570096756088713],
            [0.9759378873901753, 0.7814660277720307, 0.8437900452639759],
            [0.5551143840748602, 0.9416213625858931, 0.018325819375109798],
            [0.8891839058918612, 0.3897584833499136, 0.23174012788381404],
            [0.5343942272533609, 0.9446902786527566, 0.3309983108040673],
            [0.9086211810886919, 0.4673316125050856, 0.9672877647887311],
            [0.7642269833991849, 0.7833538476638741, 0.36152748293074355],
            [0.5877879902134989, 0.24854915949253198, 0.8001386500129717],
            [0.2585266125576412, 0.6726096996830127, 0.07534543466455257],
            [0.24686979275579146, 0.3581204374291028, 0.17205546624607326],
            [0.2602953536423117, 0.20180324954338613, 0.039763697112658924],
            [0.3428689983340756, 0.46824968188706395, 0.41734943401467184],
            [0.8995239082362045, 0.08887436668761539, 0.6239659944024077],
            [0.3487367731561747, 0.025967759445594707, 0.772998502208093],
            [0.42201424458446657, 0.9762023745686402, 0.7745174406848149],
            [0.8688039931378365, 0.5659933152008775, 0.33951428732955147],
            [0.8543881081245946, 0.41316093763504436, 0.871318342042068],
            [0.9132167793797134, 0.35413200849215065, 0.725215437601971],
            [0.8137095546640731, 0.9978741123662942, 0.45747221389667636],
            [0.20071201662760263, 0.2582307389680669, 0.3816769939266941],
            [0.07140493519976654, 0.693078530037033, 0.056855987345937775],
            [0.46495492358440327, 0.9979921406435989, 0.40327737149551457],
            [0.21053688182810426, 0.4086380290150051, 0.26128071241183926],
            [0.20206420717734874, 0.26087243024241236, 0.3063549252089236],
            [0.4572786139754772, 0.28303519112871733, 0.6388979810541625],
            [0.8573364404594027, 0.024184162701581302, 0.4652808325899911],
            [0.6165848658734696, 0.4749868707315896, 0.6609435988086897],
            [0.20523062309514328, 0.9350355883953334, 0.995911552886016],
        ],
        per_k: &[
            (1, 10.0, &[0, 1, 2, 3, 4, 5, 6, 7, 0, 8, 9, 10, 11, 12, 13, 14, 15, 5, 7, 16, 17, 18, 1, 6, 10, 18, 8, 13, 19, 15]),
            (2, 6.0051178609369495, &[0, 1, 2, 3, 4, 2, 0, 5, 0, 6, 1, 7, 8, 9, 10, 11, 12, 2, 5, 5, 0, 7, 1, 0, 7, 7, 6, 10, 6, 12]),
            (3, 3.2891533378439592, &[0, 1, 0, 2, 3, 0, 0, 2, 0, 2, 1, 4, 4, 5, 2, 6, 7, 0, 2, 2, 0, 4, 1, 0, 4, 4, 6, 2, 6, 7]),
            (4, 2.7307509071104206, &[0, 1, 0, 2, 3, 0, 0, 2, 0, 2, 1, 4, 4, 4, 2, 5, 6, 0, 2, 2, 0, 4, 1, 0, 4, 4, 5, 2, 2, 6]),
            (5, 0.2394995808256417, &[0, 1, 2, 2, 0, 0, 0, 2, 0, 2, 1, 1, 1, 1, 2, 1, 0, 0, 2, 2, 0, 1, 1, 0, 1, 1, 1, 2, 2, 0]),
            (6, 0.3688556549529508, &[0, 1, 2, 2, 0, 2, 0, 2, 0, 2, 1, 1, 1, 1, 2, 1, 0, 0, 2, 2, 0, 1, 1, 0, 1, 1, 1, 2, 1, 0]),
        ],
        best_k: 5,
    },
];
