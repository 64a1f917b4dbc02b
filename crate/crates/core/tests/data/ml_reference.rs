// Generated by tests/oracle_gen/ml_values.py (mpmath, direct high-precision summation).
const ML2_REFERENCE: &[[f64; 4]] = &[
    [0.5, 0.5, 3.0, 48618.53075158231],
    [0.5, 0.5, -0.5, 0.25634441145129333],
    [0.5, 0.5, -5.0, 0.010666394882413156],
    [0.5, 1.0, 3.0, 16205.988853999586],
    [0.5, 1.0, -0.5, 0.6156903441929259],
    [0.5, 1.0, -5.0, 0.11070463773306863],
    [0.5, 1.25, 3.0, 9356.341580978937],
    [0.5, 1.25, -0.5, 0.7211206211952026],
    [0.5, 1.25, -5.0, 0.15093017971307265],
    [0.5, 2.0, 3.0, 1800.1781907220334],
    [0.5, 2.0, -0.5, 0.7195197109627286],
    [0.5, 2.0, -5.0, 0.19010401892842527],
    [0.5, 2.5, 3.0, 599.7260635740112],
    [0.5, 2.5, -0.5, 0.5609605780745427],
    [0.5, 2.5, -5.0, 0.16197919621431495],
    [0.8, 0.5, 3.0, 128.83083568436226],
    [0.8, 0.5, -0.5, 0.19021867180089233],
    [0.8, 0.5, -5.0, -0.0458849995290877],
    [0.8, 0.5, -50.0, -0.004661851076992445],
    [0.8, 1.0, 3.0, 64.7517879857025],
    [0.8, 1.0, -0.5, 0.6030237158628037],
    [0.8, 1.0, -5.0, 0.057595384762152244],
    [0.8, 1.0, -50.0, 0.0044677761579029925],
    [0.8, 1.25, 3.0, 45.82614566991498],
    [0.8, 1.25, -0.5, 0.7302363673226626],
    [0.8, 1.25, -5.0, 0.11218648428555078],
    [0.8, 1.25, -50.0, 0.010264217093639805],
    [0.8, 2.0, 3.0, 16.00809513207114],
    [0.8, 2.0, -0.5, 0.7583703258874261],
    [0.8, 2.0, -5.0, 0.19744210132577514],
    [0.8, 2.0, -50.0, 0.021599977004151782],
    [0.8, 2.5, 3.0, 7.787427591864431],
    [0.8, 2.5, -0.5, 0.5973373322781635],
    [0.8, 2.5, -5.0, 0.18405990721844656],
    [0.8, 2.5, -50.0, 0.02163751636933763],
    [1.0, 0.5, 3.0, 34.855670388507185],
    [1.0, 0.5, -0.5, 0.15527712659616935],
    [1.0, 0.5, -5.0, -0.08860647588682764],
    [1.0, 0.5, -50.0, -0.005820268034955912],
    [1.0, 0.5, -500.0, -0.0005658906749211604],
    [1.0, 1.0, 3.0, 20.085536923187668],
    [1.0, 1.0, -0.5, 0.6065306597126334],
    [1.0, 1.0, -5.0, 0.006737946999085467],
    [1.0, 1.0, -50.0, 1.9287498479639178e-22],
    [1.0, 1.0, -500.0, -9.749428592678629e-42],
    [1.0, 1.25, 3.0, 15.185232890327612],
    [1.0, 1.25, -0.5, 0.7465566108271107],
    [1.0, 1.25, -5.0, 0.07220898239434924],
    [1.0, 1.25, -50.0, 0.005602126536080132],
    [1.0, 1.25, -500.0, 0.0005524616847623343],
    [1.0, 2.0, 3.0, 6.361845641062556],
    [1.0, 2.0, -0.5, 0.7869386805747332],
    [1.0, 2.0, -5.0, 0.1986524106001829],
    [1.0, 2.0, -50.0, 0.02],
    [1.0, 2.0, -500.0, 0.002],
    [1.0, 2.5, 3.0, 3.4340381448525434],
    [1.0, 2.5, -0.5, 0.6211085063846774],
    [1.0, 2.5, -5.0, 0.19956399104171915],
    [1.0, 2.5, -50.0, 0.022339579401277166],
    [1.0, 2.5, -500.0, 0.0022544993122941346],
    [1.1, 0.5, 3.0, 22.68552358519368],
    [1.1, 0.5, -0.5, 0.1425992298617767],
    [1.1, 0.5, -5.0, -0.11531514827377667],
    [1.1, 0.5, -50.0, -0.0055763476632057045],
    [1.1, 0.5, -500.0, -0.000542587236015859],
    [1.1, 0.5, -2000.0, -0.0001353468158130083],
    [1.1, 1.0, 3.0, 13.74891350565742],
    [1.1, 1.0, -0.5, 0.6125308121724148],
    [1.1, 1.0, -5.0, -0.0278410739164279],
    [1.1, 1.0, -50.0, -0.0019600956729167985],
    [1.1, 1.0, -500.0, -0.000187985901626834],
    [1.1, 1.0, -2000.0, -4.684055883831577e-05],
    [1.1, 1.25, 3.0, 10.647955998943427],
    [1.1, 1.25, -0.5, 0.7579601887807249],
    [1.1, 1.25, -5.0, 0.04471461104807077],
    [1.1, 1.25, -50.0, 0.0032337771815507577],
    [1.1, 1.25, -500.0, 0.00032172362213270705],
    [1.1, 1.25, -2000.0, 8.039451077466954e-05],
    [1.1, 2.0, 3.0, 4.7582800437721415],
    [1.1, 2.0, -0.5, 0.8016723528127568],
    [1.1, 2.0, -5.0, 0.19806650789679703],
    [1.1, 2.0, -50.0, 0.018786850570237303],
    [1.1, 2.0, -500.0, 0.001872247009596388],
    [1.1, 2.0, -2000.0, 0.0004679323449201002],
    [1.1, 2.5, 3.0, 2.661233122508154],
    [1.1, 2.5, -0.5, 0.6325760719967601],
    [1.1, 2.5, -5.0, 0.2080416882523252],
    [1.1, 2.5, -50.0, 0.02240607824738712],
    [1.1, 2.5, -500.0, 0.0022527825080068085],
    [1.1, 2.5, -2000.0, 0.0005634466590111503],
    [1.25, 0.5, 3.0, 13.854280665219733],
    [1.25, 0.5, -0.5, 0.131197664613037],
    [1.25, 0.5, -5.0, -0.17981409652965866],
    [1.25, 0.5, -50.0, -0.004119392678622807],
    [1.25, 0.5, -500.0, -0.0004137083060103298],
    [1.25, 0.5, -2000.0, -0.0001034306394168991],
    [1.25, 1.0, 3.0, 8.933723959366926],
    [1.25, 1.0, -0.5, 0.6268786972674762],
    [1.25, 1.0, -5.0, -0.10080645224636171],
    [1.25, 1.0, -50.0, -0.0042572794085854685],
    [1.25, 1.0, -500.0, -0.00040972500110676946],
    [1.25, 1.0, -2000.0, -0.00010211202737315822],
    [1.25, 1.25, 3.0, 7.1258251730526405],
    [1.25, 1.25, -0.5, 0.778772829488454],
    [1.25, 1.25, -5.0, -0.01122191771732039],
    [1.25, 1.25, -50.0, -0.00011103644446061734],
    [1.25, 1.25, -500.0, -1.0285837317284496e-06],
    [1.25, 1.25, -2000.0, -6.38862886221032e-08],
    [1.25, 2.0, 3.0, 3.4421577708773574],
    [1.25, 2.0, -0.5, 0.8238539492731942],
    [1.25, 2.0, -5.0, 0.19663992993524368],
    [1.25, 2.0, -50.0, 0.01643668072994904],
    [1.25, 2.0, -500.0, 0.0016332291531685158],
    [1.25, 2.0, -2000.0, 0.00040809503849783304],
    [1.25, 2.5, 3.0, 2.0075208405772678],
    [1.25, 2.5, -0.5, 0.6489796436647663],
    [1.25, 2.5, -5.0, 0.22289691380763152],
    [1.25, 2.5, -50.0, 0.022067473755305957],
    [1.25, 2.5, -500.0, 0.002206527359809138],
    [1.25, 2.5, -2000.0, 0.000551631357603563],
    [1.5, 0.5, 3.0, 7.73364094986551],
    [1.5, 0.5, -0.5, 0.13441755684874837],
    [1.5, 0.5, -5.0, -0.4586326314846411],
    [1.5, 0.5, -50.0, 0.0058060962552030325],
    [1.5, 0.5, -500.0, 4.229958237721604e-06],
    [1.5, 0.5, -2000.0, 2.644581405855268e-07],
    [1.5, 0.5, -10000.0, 1.05785455278854e-08],
    [1.5, 1.0, 3.0, 5.40461071590103],
    [1.5, 1.0, -0.5, 0.6632367948724279],
    [1.5, 1.0, -5.0, -0.3000820504131309],
    [1.5, 1.0, -50.0, -0.004578385105839278],
    [1.5, 1.0, -500.0, -0.0005641599826205787],
    [1.5, 1.0, -2000.0, -0.0001410469330937822],
    [1.5, 1.0, -10000.0, -2.820947547489963e-05],
    [1.5, 1.25, 3.0, 4.479123340822839],
    [1.5, 1.25, -0.5, 0.8210277632348698],
    [1.5, 1.25, -5.0, -0.14431026771776775],
    [1.5, 1.25, -50.0, -0.004025882521071619],
    [1.5, 1.25, -500.0, -0.0004094573083120181],
    [1.5, 1.25, -2000.0, -0.00010209638520164503],
    [1.5, 1.25, -10000.0, -2.040484169146122e-05],
    [1.5, 2.0, 3.0, 2.3898171221059177],
    [1.5, 2.0, -0.5, 0.8595440533980158],
    [1.5, 2.0, -5.0, 0.20456444300647947],
    [1.5, 2.0, -50.0, 0.011167669745851065],
    [1.5, 2.0, -500.0, 0.0011283707071790372],
    [1.5, 2.0, -2000.0, 0.00028209465954480786],
    [1.5, 2.0, -10000.0, 5.6418957296921076e-05],
    [1.5, 2.5, 3.0, 1.4682035719670101],
    [1.5, 2.5, -0.5, 0.673526410255144],
    [1.5, 2.5, -5.0, 0.26001641008262616],
    [1.5, 2.5, -50.0, 0.020091567702116786],
    [1.5, 2.5, -500.0, 0.002001128319965241],
    [1.5, 2.5, -2000.0, 0.0005000705234665469],
    [1.5, 2.5, -10000.0, 0.00010000282094754749],
    [1.9, 0.5, 3.0, 4.168857525975628],
    [1.9, 0.5, -0.5, 0.18917169215983634],
    [1.9, 0.5, -5.0, -1.2825734465874095],
    [1.9, 0.5, -50.0, -1.0823077867912922],
    [1.9, 0.5, -500.0, -0.21946729683884933],
    [1.9, 0.5, -2000.0, 0.0243386732848727],
    [1.9, 0.5, -10000.0, -0.00013887934765441904],
    [1.9, 1.0, 3.0, 3.2164788191246094],
    [1.9, 1.0, -0.5, 0.7400968457440944],
    [1.9, 1.0, -5.0, -0.60351609182244],
    [1.9, 1.0, -50.0, 0.022022145114234178],
    [1.9, 1.0, -500.0, 0.05291062718358336],
    [1.9, 1.0, -2000.0, -0.005998000754877547],
    [1.9, 1.0, -10000.0, -2.6558902021540284e-06],
    [1.9, 1.25, 3.0, 2.7954491092378437],
    [1.9, 1.25, -0.5, 0.8959955546307543],
    [1.9, 1.25, -5.0, -0.26901429412137057],
    [1.9, 1.25, -50.0, 0.1403684236730119],
    [1.9, 1.25, -500.0, 0.03996866470967894],
    [1.9, 1.25, -2000.0, -0.0035976795979572513],
    [1.9, 1.25, -10000.0, -2.0377273569107165e-05],
    [1.9, 2.0, 3.0, 1.6815364307353202],
    [1.9, 2.0, -0.5, 0.9085235530275941],
    [1.9, 2.0, -5.0, 0.3072892580178467],
    [1.9, 2.0, -50.0, 0.07175029080492172],
    [1.9, 2.0, -500.0, 0.004099644511931724],
    [1.9, 2.0, -2000.0, -0.00011950427710372336],
    [1.9, 2.0, -10000.0, 1.0718928688016257e-05],
    [1.9, 2.5, 3.0, 1.096574932244757],
    [1.9, 2.5, -0.5, 0.7041465259482528],
    [1.9, 2.5, -5.0, 0.3676132074230933],
    [1.9, 2.5, -50.0, 0.02787916210500195],
    [1.9, 2.5, -500.0, 0.0015190240155838906],
    [1.9, 2.5, -2000.0, 0.00033221791142304727],
    [1.9, 2.5, -10000.0, 6.715550978268668e-05],
];
const MLBV_REFERENCE: &[[f64; 6]] = &[
    [0.3, 1.1, 1.0, -1.0, -3.0, 0.06583589353934337],
    [0.3, 1.1, 1.0, 0.7, -2.0, -0.06185827753257855],
    [0.3, 1.1, 2.5, -1.0, -3.0, 0.23448546907511805],
    [0.3, 1.1, 2.5, 0.7, -2.0, 0.5789964918981427],
    [0.3, 1.5, 1.0, -1.0, -3.0, 0.017702406844239113],
    [0.3, 1.5, 1.0, 0.7, -2.0, -0.4527609478025518],
    [0.3, 1.5, 2.5, -1.0, -3.0, 0.27563855495678535],
    [0.3, 1.5, 2.5, 0.7, -2.0, 0.7865123124866472],
    [0.3, 1.9, 1.0, -1.0, -3.0, 0.03601143239626619],
    [0.3, 1.9, 1.0, 0.7, -2.0, -0.19860413041871433],
    [0.3, 1.9, 2.5, -1.0, -3.0, 0.3199490208441492],
    [0.3, 1.9, 2.5, 0.7, -2.0, 1.0539191972537112],
    [1.0, 1.1, 1.0, -1.0, -3.0, -0.01022659665624742],
    [1.0, 1.1, 1.0, -20.0, -50.0, -0.0010284935283953085],
    [1.0, 1.1, 1.0, -50.0, -5.0, -0.0001786830270551314],
    [1.0, 1.1, 1.0, 0.7, -2.0, 0.2518592389362047],
    [1.0, 1.1, 2.5, -1.0, -3.0, 0.24805523503272217],
    [1.0, 1.1, 2.5, -20.0, -50.0, 0.0160564442489885],
    [1.0, 1.1, 2.5, -50.0, -5.0, 0.020348014293632817],
    [1.0, 1.1, 2.5, 0.7, -2.0, 0.5007268200765057],
    [1.0, 1.5, 1.0, -1.0, -3.0, -0.15421807397904652],
    [1.0, 1.5, 1.0, -20.0, -50.0, -0.004803918105778712],
    [1.0, 1.5, 1.0, -50.0, -5.0, -0.0009719947746062293],
    [1.0, 1.5, 1.0, 0.7, -2.0, 0.26620145772734016],
    [1.0, 1.5, 2.5, -1.0, -3.0, 0.29329106465510807],
    [1.0, 1.5, 2.5, -20.0, -50.0, 0.015849740939952027],
    [1.0, 1.5, 2.5, -50.0, -5.0, 0.020548727585703686],
    [1.0, 1.5, 2.5, 0.7, -2.0, 0.6315522992775282],
    [1.0, 1.9, 1.0, -1.0, -3.0, -0.23819203153028895],
    [1.0, 1.9, 1.0, -20.0, -50.0, -0.008926813837787345],
    [1.0, 1.9, 1.0, -50.0, -5.0, -0.0016858135656067225],
    [1.0, 1.9, 1.0, 0.7, -2.0, 0.539443075917024],
    [1.0, 1.9, 2.5, -1.0, -3.0, 0.3551085452846212],
    [1.0, 1.9, 2.5, -20.0, -50.0, 0.015020144777369692],
    [1.0, 1.9, 2.5, -50.0, -5.0, 0.02088139192275311],
    [1.0, 1.9, 2.5, 0.7, -2.0, 0.7646227554341071],
    [1.7, 1.1, 1.0, -1.0, -3.0, -0.072480311326626],
    [1.7, 1.1, 1.0, -20.0, -50.0, -0.0042275925947709075],
    [1.7, 1.1, 1.0, -50.0, -5.0, -0.011098845144742232],
    [1.7, 1.1, 1.0, 0.7, -2.0, 0.24934962295012195],
    [1.7, 1.1, 2.5, -1.0, -3.0, 0.27169779722012216],
    [1.7, 1.1, 2.5, -20.0, -50.0, 0.016365450038173853],
    [1.7, 1.1, 2.5, -50.0, -5.0, 0.016909739813278826],
    [1.7, 1.1, 2.5, 0.7, -2.0, 0.4459646928524382],
    [1.7, 1.5, 1.0, -1.0, -3.0, -0.3008849213001306],
    [1.7, 1.5, 1.0, -20.0, -50.0, -0.0036632543029613213],
    [1.7, 1.5, 1.0, -50.0, -5.0, -0.03132378448945381],
    [1.7, 1.5, 1.0, 0.7, -2.0, 0.24586054727601778],
    [1.7, 1.5, 2.5, -1.0, -3.0, 0.3295618814346348],
    [1.7, 1.5, 2.5, -20.0, -50.0, 0.013912932462208883],
    [1.7, 1.5, 2.5, -50.0, -5.0, 0.016359317986643654],
    [1.7, 1.5, 2.5, 0.7, -2.0, 0.5473211290171458],
    [1.7, 1.9, 1.0, -1.0, -3.0, -0.4259349692943408],
    [1.7, 1.9, 1.0, -20.0, -50.0, -0.20420337669355837],
    [1.7, 1.9, 1.0, -50.0, -5.0, -0.07091540772172325],
    [1.7, 1.9, 1.0, 0.7, -2.0, 0.4197348502376867],
    [1.7, 1.9, 2.5, -1.0, -3.0, 0.41282205589624393],
    [1.7, 1.9, 2.5, -20.0, -50.0, 0.013785147689298546],
    [1.7, 1.9, 2.5, -50.0, -5.0, 0.01679851742142226],
    [1.7, 1.9, 2.5, 0.7, -2.0, 0.6500763674696389],
];
