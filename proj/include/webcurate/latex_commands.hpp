// Generated by scripts/gen_latex_symbols.py; do not edit.
#pragma once

#include <array>
#include <string_view>

namespace webcurate::math {

inline constexpr std::array<std::string_view, 5130> kLatexCommandInventory = {
    "\\AA",
    "\\AC",
    "\\AE",
    "\\APLbox",
    "\\APLboxquestion",
    "\\APLboxupcaret",
    "\\APLcirc",
    "\\APLcomment",
    "\\APLdown",
    "\\APLdownarrowbox",
    "\\APLinput",
    "\\APLinv",
    "\\APLleftarrowbox",
    "\\APLlog",
    "\\APLnot",
    "\\APLnotbackslash",
    "\\APLnotslash",
    "\\APLrightarrowbox",
    "\\APLup",
    "\\APLuparrowbox",
    "\\APLvert",
    "\\Aboxed",
    "\\Alph",
    "\\Alpha",
    "\\And",
    "\\Angle",
    "\\Angstroem",
    "\\Angstrom",
    "\\Aries",
    "\\ArrowBetweenLines",
    "\\Arrowvert",
    "\\AtBeginLecture",
    "\\AtBeginPart",
    "\\BNiceArray",
    "\\BNiceMatrix",
    "\\Barv",
    "\\Bbb",
    "\\BbbA",
    "\\BbbB",
    "\\BbbC",
    "\\BbbD",
    "\\BbbE",
    "\\BbbF",
    "\\BbbG",
    "\\BbbGamma",
    "\\BbbH",
    "\\BbbI",
    "\\BbbJ",
    "\\BbbK",
    "\\BbbL",
    "\\BbbM",
    "\\BbbN",
    "\\BbbO",
    "\\BbbP",
    "\\BbbPi",
    "\\BbbQ",
    "\\BbbR",
    "\\BbbS",
    "\\BbbT",
    "\\BbbU",
    "\\BbbV",
    "\\BbbW",
    "\\BbbX",
    "\\BbbY",
    "\\BbbZ",
    "\\Bbba",
    "\\Bbbb",
    "\\Bbbc",
    "\\Bbbd",
    "\\Bbbe",
    "\\Bbbeight",
    "\\Bbbf",
    "\\Bbbfive",
    "\\Bbbfour",
    "\\Bbbg",
    "\\Bbbgamma",
    "\\Bbbh",
    "\\Bbbi",
    "\\Bbbj",
    "\\Bbbk",
    "\\Bbbl",
    "\\Bbbm",
    "\\Bbbn",
    "\\Bbbnine",
    "\\Bbbo",
    "\\Bbbone",
    "\\Bbbp",
    "\\Bbbpi",
    "\\Bbbq",
    "\\Bbbr",
    "\\Bbbs",
    "\\Bbbseven",
    "\\Bbbsix",
    "\\Bbbsum",
    "\\Bbbt",
    "\\Bbbthree",
    "\\Bbbtwo",
    "\\Bbbu",
    "\\Bbbv",
    "\\Bbbw",
    "\\Bbbx",
    "\\Bbby",
    "\\Bbbz",
    "\\Bbbzero",
    "\\Bdd",
    "\\Beta",
    "\\Big",
    "\\Bigg",
    "\\Biggl",
    "\\Biggm",
    "\\Biggr",
    "\\Bigl",
    "\\Bigm",
    "\\Bigr",
    "\\Bmatrix",
    "\\Bot",
    "\\Box",
    "\\Bra",
    "\\Braket",
    "\\Bsmallmatrix",
    "\\Bumpeq",
    "\\CIRCLE",
    "\\CONJUNCTION",
    "\\CYRA",
    "\\CYRABHCH",
    "\\CYRABHCHDSC",
    "\\CYRABHDZE",
    "\\CYRABHHA",
    "\\CYRAE",
    "\\CYRB",
    "\\CYRBYUS",
    "\\CYRC",
    "\\CYRCH",
    "\\CYRCHLDSC",
    "\\CYRCHRDSC",
    "\\CYRCHVCRS",
    "\\CYRD",
    "\\CYRDJE",
    "\\CYRDZE",
    "\\CYRDZHE",
    "\\CYRE",
    "\\CYREREV",
    "\\CYRERY",
    "\\CYRF",
    "\\CYRFITA",
    "\\CYRG",
    "\\CYRGDSC",
    "\\CYRGDSCHCRS",
    "\\CYRGHCRS",
    "\\CYRGHK",
    "\\CYRGUP",
    "\\CYRH",
    "\\CYRHDSC",
    "\\CYRHHCRS",
    "\\CYRHHK",
    "\\CYRHRDSN",
    "\\CYRI",
    "\\CYRIE",
    "\\CYRII",
    "\\CYRIOTBYUS",
    "\\CYRIOTE",
    "\\CYRIOTLYUS",
    "\\CYRISHRT",
    "\\CYRIZH",
    "\\CYRJE",
    "\\CYRK",
    "\\CYRKBEAK",
    "\\CYRKDSC",
    "\\CYRKHCRS",
    "\\CYRKHK",
    "\\CYRKOPPA",
    "\\CYRKSI",
    "\\CYRKVCRS",
    "\\CYRL",
    "\\CYRLDSC",
    "\\CYRLJE",
    "\\CYRLYUS",
    "\\CYRM",
    "\\CYRMDSC",
    "\\CYRN",
    "\\CYRNDSC",
    "\\CYRNG",
    "\\CYRNHK",
    "\\CYRNJE",
    "\\CYRO",
    "\\CYROMEGA",
    "\\CYROMEGARND",
    "\\CYROMEGATITLO",
    "\\CYROT",
    "\\CYROTLD",
    "\\CYRP",
    "\\CYRPHK",
    "\\CYRPSI",
    "\\CYRR",
    "\\CYRRTICK",
    "\\CYRS",
    "\\CYRSCHWA",
    "\\CYRSDSC",
    "\\CYRSEMISFTSN",
    "\\CYRSFTSN",
    "\\CYRSH",
    "\\CYRSHA",
    "\\CYRSHCH",
    "\\CYRSHHA",
    "\\CYRT",
    "\\CYRTDSC",
    "\\CYRTETSE",
    "\\CYRTSHE",
    "\\CYRU",
    "\\CYRUK",
    "\\CYRUSHRT",
    "\\CYRV",
    "\\CYRY",
    "\\CYRYA",
    "\\CYRYAT",
    "\\CYRYHCRS",
    "\\CYRYI",
    "\\CYRYO",
    "\\CYRYU",
    "\\CYRZ",
    "\\CYRZDSC",
    "\\CYRZH",
    "\\CYRZHDSC",
    "\\CYRpalochka",
    "\\Cap",
    "\\CapitalDifferentialD",
    "\\Cdprime",
    "\\CheckedBox",
    "\\Checkedbox",
    "\\Chi",
    "\\Circle",
    "\\Colon",
    "\\Colonapprox",
    "\\Coloneq",
    "\\Coloneqq",
    "\\Colonsim",
    "\\Complex",
    "\\ComplexI",
    "\\ComplexJ",
    "\\CorrectChoiceEmphasis",
    "\\Corresponds",
    "\\Cpageref",
    "\\Cprime",
    "\\Cref",
    "\\Crefrange",
    "\\Crossedbox",
    "\\Cup",
    "\\DD",
    "\\DDDot",
    "\\DDot",
    "\\DDownarrow",
    "\\DH",
    "\\DJ",
    "\\DOTSB",
    "\\DOTSI",
    "\\DOTSX",
    "\\Dagger",
    "\\Darr",
    "\\DashV",
    "\\DashVDash",
    "\\Dashv",
    "\\Ddownarrow",
    "\\DeclareDocumentCommand",
    "\\DeclareDocumentEnvironment",
    "\\DeclareExpandableDocumentCommand",
    "\\DeclareMathOperator",
    "\\DeclareMathSizes",
    "\\DeclareOption",
    "\\DeclarePairedDelimiter",
    "\\DeclarePairedDelimiterX",
    "\\DeclarePairedDelimiterXPP",
    "\\DeclarePairedDelimitersXPP",
    "\\Delta",
    "\\Diamond",
    "\\Diamondblack",
    "\\Diamonddot",
    "\\DifferentialD",
    "\\Digamma",
    "\\Dot",
    "\\Doteq",
    "\\DoublePi",
    "\\DownArrowBar",
    "\\DownArrowUpArrow",
    "\\DownLeftRightVector",
    "\\DownLeftTeeVector",
    "\\DownLeftVectorBar",
    "\\DownRightTeeVector",
    "\\DownRightVectorBar",
    "\\Downarrow",
    "\\Dz",
    "\\Dzh",
    "\\Epsilon",
    "\\Eqcolon",
    "\\Eqqcolon",
    "\\Equal",
    "\\Equiv",
    "\\Eta",
    "\\Euler",
    "\\EulerGamma",
    "\\Eulerconst",
    "\\Exclam",
    "\\ExponetialE",
    "\\Finv",
    "\\Game",
    "\\Gamma",
    "\\Gemini",
    "\\GreaterLess",
    "\\GreaterTilde",
    "\\Gt",
    "\\HBar",
    "\\Harr",
    "\\Hermaphrodite",
    "\\Hstrok",
    "\\Huge",
    "\\IJ",
    "\\Im",
    "\\Insert",
    "\\Iota",
    "\\Join",
    "\\Jupiter",
    "\\KaTeX",
    "\\Kappa",
    "\\Ket",
    "\\Ketbra",
    "\\Koppa",
    "\\LARGE",
    "\\LEFTCIRCLE",
    "\\LEFTcircle",
    "\\LHD",
    "\\LLeftarrow",
    "\\LVec",
    "\\LaTeX",
    "\\Lambda",
    "\\Large",
    "\\Larr",
    "\\Lbag",
    "\\Lbrack",
    "\\Lbrbrak",
    "\\Ldsh",
    "\\LeftArrowBar",
    "\\LeftDownTeeVector",
    "\\LeftDownVectorBar",
    "\\LeftRightVector",
    "\\LeftTeeVector",
    "\\LeftTriangle",
    "\\LeftTriangleBar",
    "\\LeftUpDownVector",
    "\\LeftUpTeeVector",
    "\\LeftUpVectorBar",
    "\\LeftVectorBar",
    "\\Leftarrow",
    "\\Leftrightarrow",
    "\\Leo",
    "\\LessTilde",
    "\\Libra",
    "\\Lightning",
    "\\Lleftarrow",
    "\\Lmidot",
    "\\Longleftarrow",
    "\\Longleftrightarrow",
    "\\Longmappedfrom",
    "\\Longmapsfrom",
    "\\Longmapsto",
    "\\Longrightarrow",
    "\\Lparen",
    "\\Lparengtr",
    "\\Lrarr",
    "\\Lsh",
    "\\Lt",
    "\\Lvzigzag",
    "\\MTFlushSpaceAbove",
    "\\MTFlushSpaceBelow",
    "\\MTThinColon",
    "\\Mappedfrom",
    "\\MapsDown",
    "\\MapsUp",
    "\\Mapsfrom",
    "\\Mapsto",
    "\\Mars",
    "\\Mercury",
    "\\Mho",
    "\\Micro",
    "\\MoveEqLeft",
    "\\Mu",
    "\\NG",
    "\\Nearrow",
    "\\Neptune",
    "\\NestedGreaterGreater",
    "\\NestedLessLess",
    "\\NewDocumentCommand",
    "\\NewDocumentEnvironment",
    "\\NewExpandableDocumentCommand",
    "\\NiceArray",
    "\\NiceArrayWithDelims",
    "\\NiceMatrix",
    "\\NiceMatrixBlock",
    "\\NiceTabular",
    "\\Not",
    "\\NotGreaterLess",
    "\\NotGreaterTilde",
    "\\NotLeftTriangle",
    "\\NotLessTilde",
    "\\NotRightTriangle",
    "\\Nu",
    "\\Nwarrow",
    "\\OE",
    "\\Omega",
    "\\Omicron",
    "\\Otimes",
    "\\Overrightarrow",
    "\\Perp",
    "\\Phi",
    "\\Pi",
    "\\Pisymbol",
    "\\Planckconst",
    "\\Pluto",
    "\\Pr",
    "\\Prec",
    "\\PrecedesSlantEqual",
    "\\PrecedesTilde",
    "\\PropertyLine",
    "\\Proportion",
    "\\ProvideDocumentCommand",
    "\\ProvideDocumentEnvironment",
    "\\ProvideExpandableDocumentCommand",
    "\\Psi",
    "\\QED",
    "\\Qoppa",
    "\\Question",
    "\\RHD",
    "\\RIGHTCIRCLE",
    "\\RIGHTcircle",
    "\\RRightarrow",
    "\\Rarr",
    "\\Rbag",
    "\\Rbrack",
    "\\Rbrbrak",
    "\\Rdsh",
    "\\Re",
    "\\Reals",
    "\\Relbar",
    "\\RenewDocumentCommand",
    "\\RenewDocumentEnvironment",
    "\\RenewExpandableDocumentCommand",
    "\\Require",
    "\\RequirePackage",
    "\\Residue",
    "\\ReverseUpEquilibrium",
    "\\Rho",
    "\\RightArrowBar",
    "\\RightDownTeeVector",
    "\\RightDownVectorBar",
    "\\RightTeeVector",
    "\\RightTriangle",
    "\\RightTriangleBar",
    "\\RightUpDownVector",
    "\\RightUpTeeVector",
    "\\RightUpVectorBar",
    "\\RightVectorBar",
    "\\Rightarrow",
    "\\Roman",
    "\\RoundImplies",
    "\\Rparen",
    "\\Rparenless",
    "\\Rrightarrow",
    "\\Rsh",
    "\\Rule",
    "\\RuleDelayed",
    "\\Rvzigzag",
    "\\Same",
    "\\Sampi",
    "\\Saturn",
    "\\Scorpio",
    "\\Searrow",
    "\\Set",
    "\\SetDelayed",
    "\\Sigma",
    "\\SolutionEmphasis",
    "\\Space",
    "\\Sqcap",
    "\\Sqcup",
    "\\Square",
    "\\Squaredot",
    "\\Stigma",
    "\\Subset",
    "\\Succ",
    "\\SucceedsSlantEqual",
    "\\SucceedsTilde",
    "\\Sun",
    "\\Supset",
    "\\Swarrow",
    "\\TH",
    "\\Tau",
    "\\Taurus",
    "\\TeX",
    "\\TextOrMath",
    "\\Theta",
    "\\Thorn",
    "\\Tiny",
    "\\Top",
    "\\Tstrok",
    "\\UUparrow",
    "\\Uarr",
    "\\UpArrowBar",
    "\\UpEquilibrium",
    "\\Uparrow",
    "\\Updownarrow",
    "\\Upsilon",
    "\\Uranus",
    "\\Uuparrow",
    "\\VDash",
    "\\VERT",
    "\\VNiceArray",
    "\\VNiceMatrix",
    "\\Vbar",
    "\\Vdash",
    "\\Vec",
    "\\Vee",
    "\\Venus",
    "\\Vert",
    "\\Vmatrix",
    "\\Vsmallmatrix",
    "\\Vvdash",
    "\\Vvert",
    "\\Wedge",
    "\\XBox",
    "\\Xi",
    "\\Yup",
    "\\Zbar",
    "\\Zeta",
    "\\aa",
    "\\above",
    "\\abovedisplayshortskip",
    "\\abovedisplayskip",
    "\\abovefrac",
    "\\abovewithdelims",
    "\\abstract",
    "\\ac",
    "\\accurrent",
    "\\acidfree",
    "\\action",
    "\\actionenv",
    "\\active",
    "\\acute",
    "\\acwcirclearrow",
    "\\acwgapcirclearrow",
    "\\acwleftarcarrow",
    "\\acwopencirclearrow",
    "\\acwoverarcarrow",
    "\\acwunderarcarrow",
    "\\addcontentsline",
    "\\addfootbox",
    "\\addheadbox",
    "\\address",
    "\\addstarredchapter",
    "\\addstarredpart",
    "\\addstarredsection",
    "\\addtocontents",
    "\\addtocounter",
    "\\addtolength",
    "\\addvspace",
    "\\adjdemerits",
    "\\adjustlimits",
    "\\adjustmtc",
    "\\adjustptc",
    "\\adjuststc",
    "\\adots",
    "\\advance",
    "\\ae",
    "\\afterpage",
    "\\againframe",
    "\\agemO",
    "\\alef",
    "\\alefsym",
    "\\aleph",
    "\\alert",
    "\\alertblock",
    "\\align",
    "\\alignat",
    "\\aligned",
    "\\allequal",
    "\\allowbreak",
    "\\alltt",
    "\\alph",
    "\\alpha",
    "\\alphaup",
    "\\alsoname",
    "\\alt",
    "\\altenv",
    "\\altverse",
    "\\alwaysRootAtBottom",
    "\\alwaysRootAtTop",
    "\\amalg",
    "\\ampersand",
    "\\anchor",
    "\\angdnr",
    "\\angl",
    "\\angle",
    "\\angles",
    "\\angleubar",
    "\\angln",
    "\\animate",
    "\\animatevalue",
    "\\annuity",
    "\\answerline",
    "\\appendix",
    "\\apprge",
    "\\apprle",
    "\\approx",
    "\\approxcolon",
    "\\approxcoloncolon",
    "\\approxeq",
    "\\approxeqq",
    "\\approxident",
    "\\approxnotequal",
    "\\aquarius",
    "\\arabic",
    "\\arccos",
    "\\arcctg",
    "\\arceq",
    "\\arcsin",
    "\\arctan",
    "\\arctg",
    "\\arg",
    "\\argmax",
    "\\argmin",
    "\\aries",
    "\\array",
    "\\arraycolsep",
    "\\arrayrulewidth",
    "\\arraystretch",
    "\\arrowbullet",
    "\\arrowvert",
    "\\arrowwaveleft",
    "\\arrowwaveright",
    "\\assert",
    "\\ast",
    "\\asteq",
    "\\asteraccent",
    "\\asterisk",
    "\\astrosun",
    "\\asymp",
    "\\atop",
    "\\atopfrac",
    "\\atopwithdelims",
    "\\atsign",
    "\\author",
    "\\autopageref",
    "\\autoref",
    "\\awint",
    "\\bI",
    "\\bNiceArray",
    "\\bNiceMatrix",
    "\\bNot",
    "\\backcong",
    "\\backdprime",
    "\\backepsilon",
    "\\backmatter",
    "\\backprime",
    "\\backsim",
    "\\backsimeq",
    "\\backslash",
    "\\backtrprime",
    "\\bagmember",
    "\\ballotcheck",
    "\\ballotx",
    "\\bar",
    "\\barV",
    "\\barcap",
    "\\barcup",
    "\\bardownharpoonleft",
    "\\bardownharpoonright",
    "\\barin",
    "\\barleftarrow",
    "\\barleftarrowrightarrowba",
    "\\barleftharpoon",
    "\\barleftharpoondown",
    "\\barleftharpoonup",
    "\\barovernorthwestarrow",
    "\\barrightarrowdiamond",
    "\\barrightharpoon",
    "\\barrightharpoondown",
    "\\barrightharpoonup",
    "\\baruparrow",
    "\\barupharpoonleft",
    "\\barupharpoonright",
    "\\barvee",
    "\\barwedge",
    "\\baselineskip",
    "\\baselinestretch",
    "\\bbFont",
    "\\bbrktbrk",
    "\\bcancel",
    "\\bdtriplevdash",
    "\\beamerboxesrounded",
    "\\beamerbutton",
    "\\beamercolorbox",
    "\\beamerdefaultoverlayspecification",
    "\\beamergotobutton",
    "\\beamerreturnbutton",
    "\\beamerskipbutton",
    "\\because",
    "\\begin",
    "\\begingroup",
    "\\belowdisplayshortskip",
    "\\belowdisplayskip",
    "\\belowpdfbookmark",
    "\\benzenr",
    "\\beta",
    "\\betaup",
    "\\beth",
    "\\between",
    "\\bf",
    "\\bfseries",
    "\\bgroup",
    "\\bibcite",
    "\\bibdata",
    "\\bibindent",
    "\\bibitem",
    "\\bibliography",
    "\\bibliographyref",
    "\\bibliographystyle",
    "\\bibpunct",
    "\\bibstyle",
    "\\big",
    "\\bigblacktriangledown",
    "\\bigblacktriangleup",
    "\\bigbot",
    "\\bigbreak",
    "\\bigcap",
    "\\bigcirc",
    "\\bigcup",
    "\\bigcupdot",
    "\\bigg",
    "\\biggl",
    "\\biggm",
    "\\biggr",
    "\\biginterleave",
    "\\bigl",
    "\\bigm",
    "\\bigodot",
    "\\bigoplus",
    "\\bigotimes",
    "\\bigr",
    "\\bigskip",
    "\\bigskipamount",
    "\\bigslopedvee",
    "\\bigslopedwedge",
    "\\bigsqcap",
    "\\bigsqcup",
    "\\bigstar",
    "\\bigtalloblong",
    "\\bigtimes",
    "\\bigtop",
    "\\bigtriangledown",
    "\\bigtriangleleft",
    "\\bigtriangleup",
    "\\biguplus",
    "\\bigvee",
    "\\bigwedge",
    "\\bigwhitestar",
    "\\bij",
    "\\bin",
    "\\binampersand",
    "\\bindnasrepma",
    "\\binom",
    "\\binoppenalty",
    "\\biohazard",
    "\\blackcircledownarrow",
    "\\blackcircledrightdot",
    "\\blackcircledtwodots",
    "\\blackcircleulquadwhite",
    "\\blackdiamonddownarrow",
    "\\blackhourglass",
    "\\blackinwhitediamond",
    "\\blackinwhitesquare",
    "\\blacklefthalfcircle",
    "\\blacklozenge",
    "\\blackpointerleft",
    "\\blackpointerright",
    "\\blackrighthalfcircle",
    "\\blacksmiley",
    "\\blacksquare",
    "\\blacktriangle",
    "\\blacktriangledown",
    "\\blacktriangleleft",
    "\\blacktriangleright",
    "\\blacktriangleup",
    "\\blkhorzoval",
    "\\blkvertoval",
    "\\block",
    "\\blockfull",
    "\\blockhalfshaded",
    "\\blocklefthalf",
    "\\blocklowhalf",
    "\\blockqtrshaded",
    "\\blockrighthalf",
    "\\blockthreeqtrshaded",
    "\\blockuphalf",
    "\\blue",
    "\\blueA",
    "\\blueB",
    "\\blueC",
    "\\blueD",
    "\\blueE",
    "\\bm",
    "\\bmatrix",
    "\\bmod",
    "\\bold",
    "\\boldmath",
    "\\boldsymbol",
    "\\bond",
    "\\bonuspointformat",
    "\\bonuspointpoints",
    "\\boolean",
    "\\bot",
    "\\botsemicircle",
    "\\bottomfraction",
    "\\bowtie",
    "\\box",
    "\\boxDL",
    "\\boxDR",
    "\\boxDl",
    "\\boxDr",
    "\\boxH",
    "\\boxHD",
    "\\boxHU",
    "\\boxHd",
    "\\boxHu",
    "\\boxUL",
    "\\boxUR",
    "\\boxUl",
    "\\boxUr",
    "\\boxV",
    "\\boxVH",
    "\\boxVL",
    "\\boxVR",
    "\\boxVh",
    "\\boxVl",
    "\\boxVr",
    "\\boxast",
    "\\boxbar",
    "\\boxbox",
    "\\boxbslash",
    "\\boxcircle",
    "\\boxdL",
    "\\boxdR",
    "\\boxdiag",
    "\\boxdl",
    "\\boxdot",
    "\\boxdr",
    "\\boxed",
    "\\boxh",
    "\\boxhD",
    "\\boxhU",
    "\\boxhd",
    "\\boxhu",
    "\\boxmaxdepth",
    "\\boxminus",
    "\\boxonbox",
    "\\boxplus",
    "\\boxr",
    "\\boxslash",
    "\\boxtimes",
    "\\boxuL",
    "\\boxuR",
    "\\boxul",
    "\\boxv",
    "\\boxvH",
    "\\boxvL",
    "\\boxvR",
    "\\boxvh",
    "\\boxvl",
    "\\boxvr",
    "\\boy",
    "\\bra",
    "\\brace",
    "\\bracefrac",
    "\\bracevert",
    "\\brack",
    "\\brackfrac",
    "\\braket",
    "\\breve",
    "\\brokenpenalty",
    "\\bsimilarleftarrow",
    "\\bsimilarrightarrow",
    "\\bsmallmatrix",
    "\\bsolhsub",
    "\\bstyleoption",
    "\\btext",
    "\\btimes",
    "\\bufferediter",
    "\\bull",
    "\\bullet",
    "\\bullseye",
    "\\bumpeq",
    "\\bumpeqq",
    "\\buni",
    "\\ca",
    "\\cachedproperty",
    "\\cal",
    "\\cancel",
    "\\cancer",
    "\\candra",
    "\\cap",
    "\\capbarcup",
    "\\capdot",
    "\\capitalacute",
    "\\capitalbreve",
    "\\capitalcedilla",
    "\\capitaldieresis",
    "\\capitaldotaccent",
    "\\capitalgrave",
    "\\capitalnewtie",
    "\\capitaltie",
    "\\capovercup",
    "\\capricornus",
    "\\caption",
    "\\captionsetup",
    "\\capwedge",
    "\\caretinsert",
    "\\carriagereturn",
    "\\cases",
    "\\cat",
    "\\catcode",
    "\\category",
    "\\cbcolor",
    "\\cbdelete",
    "\\cbend",
    "\\cbstart",
    "\\ccwundercurvearrow",
    "\\cdleft",
    "\\cdleftarrow",
    "\\cdlongequal",
    "\\cdot",
    "\\cdotp",
    "\\cdots",
    "\\cdparent",
    "\\cdprime",
    "\\cdright",
    "\\cdrightarrow",
    "\\ce",
    "\\cent",
    "\\center",
    "\\centerOver",
    "\\centercolon",
    "\\centerdot",
    "\\centering",
    "\\centerline",
    "\\cfrac",
    "\\ch",
    "\\changebar",
    "\\changebargrey",
    "\\changebarsep",
    "\\changebarwidth",
    "\\chapter",
    "\\chaptermark",
    "\\char",
    "\\chardef",
    "\\check",
    "\\checkandfixthelayout",
    "\\checkboxchar",
    "\\checkboxes",
    "\\checkedchar",
    "\\checkmark",
    "\\chi",
    "\\chiup",
    "\\choices",
    "\\choose",
    "\\cirE",
    "\\cirbot",
    "\\circ",
    "\\circeq",
    "\\circlearrowleft",
    "\\circlearrowright",
    "\\circlebottomhalfblack",
    "\\circledR",
    "\\circledS",
    "\\circledast",
    "\\circledbslash",
    "\\circledbullet",
    "\\circledcirc",
    "\\circleddash",
    "\\circledequal",
    "\\circledgtr",
    "\\circledless",
    "\\circledownarrow",
    "\\circledparallel",
    "\\circledrightdot",
    "\\circledstar",
    "\\circledtwodots",
    "\\circledvert",
    "\\circledwhitebullet",
    "\\circlehbar",
    "\\circlelefthalfblack",
    "\\circlellquad",
    "\\circlelrquad",
    "\\circleonleftarrow",
    "\\circleonrightarrow",
    "\\circlerighthalfblack",
    "\\circletophalfblack",
    "\\circleulquad",
    "\\circleurquad",
    "\\circleurquadblack",
    "\\circlevertfill",
    "\\circumflexaccent",
    "\\cirfnint",
    "\\cirmid",
    "\\cirscir",
    "\\citation",
    "\\cite",
    "\\citealp",
    "\\citealpfull",
    "\\citealt",
    "\\citealtfull",
    "\\citeauthor",
    "\\citefullauthor",
    "\\citep",
    "\\citepalias",
    "\\citepfull",
    "\\citestyle",
    "\\citet",
    "\\citetalias",
    "\\citetext",
    "\\citetfull",
    "\\citeyear",
    "\\citeyearpar",
    "\\clap",
    "\\class",
    "\\cleardoublepage",
    "\\clearpage",
    "\\clockoint",
    "\\closedvarcap",
    "\\closedvarcup",
    "\\closedvarcupsmashprod",
    "\\closeout",
    "\\closure",
    "\\clubpenalty",
    "\\clubs",
    "\\clubsuit",
    "\\clubsuitopen",
    "\\clwintegral",
    "\\cmd",
    "\\cmyColor",
    "\\cmykColor",
    "\\cntclockoint",
    "\\cnums",
    "\\code",
    "\\colon",
    "\\colonapprox",
    "\\coloncolon",
    "\\coloncolonapprox",
    "\\coloncolonequals",
    "\\coloncolonminus",
    "\\coloncolonsim",
    "\\coloneq",
    "\\coloneqq",
    "\\colonequals",
    "\\colonminus",
    "\\colonsim",
    "\\color",
    "\\colorbox",
    "\\colorlet",
    "\\column",
    "\\columnenv",
    "\\columns",
    "\\columnsep",
    "\\columnseprule",
    "\\columnwidth",
    "\\combiningacuteaccent",
    "\\combiningbreve",
    "\\combiningdiaeresis",
    "\\combiningdotabove",
    "\\combiningfourdotsabove",
    "\\combininggraveaccent",
    "\\combiningoverline",
    "\\combiningrightarrowabove",
    "\\combiningthreedotsabove",
    "\\combiningtilde",
    "\\comma",
    "\\commaminus",
    "\\comment",
    "\\comp",
    "\\complement",
    "\\concavediamond",
    "\\concavediamondtickleft",
    "\\concavediamondtickright",
    "\\cong",
    "\\congdot",
    "\\conictaper",
    "\\conjquant",
    "\\contentsline",
    "\\coppa",
    "\\coprod",
    "\\copyright",
    "\\corollary",
    "\\corresponds",
    "\\cos",
    "\\cosec",
    "\\cosh",
    "\\cot",
    "\\cotg",
    "\\coth",
    "\\count",
    "\\cpageref",
    "\\cprime",
    "\\cr",
    "\\cramped",
    "\\crampedclap",
    "\\crampedllap",
    "\\crampedrlap",
    "\\crampedsubarray",
    "\\crampedsubstack",
    "\\cref",
    "\\crefalias",
    "\\crefdefaultlabelformat",
    "\\crefname",
    "\\crefrange",
    "\\crefrangeconjunction",
    "\\crossproduct",
    "\\csc",
    "\\csname",
    "\\csub",
    "\\csube",
    "\\csup",
    "\\csupe",
    "\\ctg",
    "\\cth",
    "\\cuberoot",
    "\\cup",
    "\\cupbarcap",
    "\\cupdot",
    "\\cupleftarrow",
    "\\cupovercap",
    "\\cupvee",
    "\\curlyeqprec",
    "\\curlyeqsucc",
    "\\curlyvee",
    "\\curlywedge",
    "\\curraddr",
    "\\currency",
    "\\current",
    "\\currentpdfbookmark",
    "\\curvearrowleft",
    "\\curvearrowleftplus",
    "\\curvearrowright",
    "\\curvearrowrightminus",
    "\\cwcirclearrow",
    "\\cwgapcirclearrow",
    "\\cwopencirclearrow",
    "\\cwrightarcarrow",
    "\\cwundercurvearrow",
    "\\cyra",
    "\\cyrabhch",
    "\\cyrabhchdsc",
    "\\cyrabhdze",
    "\\cyrabhha",
    "\\cyrae",
    "\\cyrb",
    "\\cyrbyus",
    "\\cyrc",
    "\\cyrch",
    "\\cyrchar",
    "\\cyrchldsc",
    "\\cyrchrdsc",
    "\\cyrchvcrs",
    "\\cyrd",
    "\\cyrdje",
    "\\cyrdze",
    "\\cyrdzhe",
    "\\cyre",
    "\\cyrerev",
    "\\cyrery",
    "\\cyrf",
    "\\cyrfita",
    "\\cyrg",
    "\\cyrgdsc",
    "\\cyrgdschcrs",
    "\\cyrghcrs",
    "\\cyrghk",
    "\\cyrgup",
    "\\cyrh",
    "\\cyrhdsc",
    "\\cyrhhcrs",
    "\\cyrhhk",
    "\\cyrhrdsn",
    "\\cyrhundredthousands",
    "\\cyri",
    "\\cyrie",
    "\\cyrii",
    "\\cyriotbyus",
    "\\cyriote",
    "\\cyriotlyus",
    "\\cyrishrt",
    "\\cyrizh",
    "\\cyrje",
    "\\cyrk",
    "\\cyrkbeak",
    "\\cyrkdsc",
    "\\cyrkhcrs",
    "\\cyrkhk",
    "\\cyrkoppa",
    "\\cyrksi",
    "\\cyrkvcrs",
    "\\cyrl",
    "\\cyrldsc",
    "\\cyrlje",
    "\\cyrlyus",
    "\\cyrm",
    "\\cyrmdsc",
    "\\cyrmillions",
    "\\cyrn",
    "\\cyrndsc",
    "\\cyrng",
    "\\cyrnhk",
    "\\cyrnje",
    "\\cyro",
    "\\cyromega",
    "\\cyromegarnd",
    "\\cyromegatitlo",
    "\\cyrot",
    "\\cyrotld",
    "\\cyrp",
    "\\cyrphk",
    "\\cyrpsi",
    "\\cyrr",
    "\\cyrrtick",
    "\\cyrs",
    "\\cyrschwa",
    "\\cyrsdsc",
    "\\cyrsemisftsn",
    "\\cyrsftsn",
    "\\cyrsh",
    "\\cyrshch",
    "\\cyrshha",
    "\\cyrt",
    "\\cyrtdsc",
    "\\cyrtetse",
    "\\cyrthousands",
    "\\cyrtshe",
    "\\cyru",
    "\\cyruk",
    "\\cyrushrt",
    "\\cyrv",
    "\\cyry",
    "\\cyrya",
    "\\cyryat",
    "\\cyryhcrs",
    "\\cyryi",
    "\\cyryo",
    "\\cyryu",
    "\\cyrz",
    "\\cyrzdsc",
    "\\cyrzh",
    "\\cyrzhdsc",
    "\\dArr",
    "\\da",
    "\\dag",
    "\\dagger",
    "\\daleth",
    "\\danger",
    "\\darr",
    "\\dashV",
    "\\dashVdash",
    "\\dasharrow",
    "\\dashcolon",
    "\\dashleftarrow",
    "\\dashleftharpoondown",
    "\\dashrightarrow",
    "\\dashrightharpoondown",
    "\\dashv",
    "\\date",
    "\\day",
    "\\dbinom",
    "\\dbkarow",
    "\\dblarrowupdown",
    "\\dblcolon",
    "\\dblfloatpagefraction",
    "\\dblfloatsep",
    "\\dbloint",
    "\\dbltextfloatsep",
    "\\dbltopfraction",
    "\\dcases",
    "\\dd",
    "\\ddag",
    "\\ddagger",
    "\\ddddot",
    "\\dddot",
    "\\ddot",
    "\\ddots",
    "\\ddotseq",
    "\\decrementmtc",
    "\\decrementptc",
    "\\decrementstc",
    "\\def",
    "\\defaulthyphenchar",
    "\\defaultskewchar",
    "\\defcitealias",
    "\\definecolor",
    "\\definecolors",
    "\\definecolorseries",
    "\\definecolorset",
    "\\definition",
    "\\deg",
    "\\degree",
    "\\deletebarwidth",
    "\\delimiterfactor",
    "\\delimitershortfall",
    "\\delimsize",
    "\\delta",
    "\\deltaup",
    "\\description",
    "\\det",
    "\\df",
    "\\dfrac",
    "\\dh",
    "\\diagdown",
    "\\diagup",
    "\\diameter",
    "\\diamond",
    "\\diamondbotblack",
    "\\diamondcdot",
    "\\diamondleftarrow",
    "\\diamondleftarrowbar",
    "\\diamondleftblack",
    "\\diamondrightblack",
    "\\diamonds",
    "\\diamondsuit",
    "\\diamondtopblack",
    "\\dicei",
    "\\diceii",
    "\\diceiii",
    "\\diceiv",
    "\\dicev",
    "\\dicevi",
    "\\diffd",
    "\\digamma",
    "\\dim",
    "\\dimen",
    "\\ding",
    "\\dingasterisk",
    "\\dint",
    "\\dinter",
    "\\discretionary",
    "\\disin",
    "\\disjquant",
    "\\displayindent",
    "\\displaylines",
    "\\displaymath",
    "\\displaystyle",
    "\\displaywidowpenalty",
    "\\displaywidth",
    "\\div",
    "\\divideontimes",
    "\\divslash",
    "\\dj",
    "\\dlcrop",
    "\\dlsh",
    "\\document",
    "\\documentclass",
    "\\documentstyle",
    "\\doi",
    "\\dominilof",
    "\\dominilot",
    "\\dominitoc",
    "\\dopartlof",
    "\\dopartlot",
    "\\doparttoc",
    "\\dosectlof",
    "\\dosectlot",
    "\\dosecttoc",
    "\\dostuff",
    "\\dot",
    "\\doteq",
    "\\doteqdot",
    "\\dotequal",
    "\\dotequiv",
    "\\dotminus",
    "\\dotplus",
    "\\dots",
    "\\dotsb",
    "\\dotsc",
    "\\dotsi",
    "\\dotsim",
    "\\dotsm",
    "\\dotsminusdots",
    "\\dotso",
    "\\dotsx",
    "\\dottedcircle",
    "\\dottedsquare",
    "\\dottimes",
    "\\doublebarvee",
    "\\doublebarwedge",
    "\\doublebox",
    "\\doublecap",
    "\\doublecup",
    "\\doublehyphendemerits",
    "\\doubleplus",
    "\\doublerulesep",
    "\\doublespacing",
    "\\doubleunderline",
    "\\downarrow",
    "\\downarrowbar",
    "\\downarrowbarred",
    "\\downarrowuparrow",
    "\\downdasharrow",
    "\\downdownarrows",
    "\\downdownharpoons",
    "\\downfishtail",
    "\\downharpoonleft",
    "\\downharpoonleftbar",
    "\\downharpoonright",
    "\\downharpoonrightbar",
    "\\downharpoonsleftright",
    "\\downrightcurvedarrow",
    "\\downslopeellipsis",
    "\\downtriangleleftblack",
    "\\downtrianglerightblack",
    "\\downuparrows",
    "\\downupharpoons",
    "\\downupharpoonsleftright",
    "\\downwhitearrow",
    "\\downzigzagarrow",
    "\\dprime",
    "\\draftingarrow",
    "\\drbkarow",
    "\\drcases",
    "\\drcrop",
    "\\dres",
    "\\driver",
    "\\droang",
    "\\drsh",
    "\\dsol",
    "\\dsub",
    "\\dualmap",
    "\\duni",
    "\\dunion",
    "\\dz",
    "\\dzh",
    "\\earth",
    "\\edef",
    "\\ee",
    "\\egroup",
    "\\egsdot",
    "\\eighthnote",
    "\\eject",
    "\\elinters",
    "\\ell",
    "\\elsdot",
    "\\em",
    "\\email",
    "\\emdash",
    "\\emergencystretch",
    "\\emph",
    "\\empheqlbrace",
    "\\empty",
    "\\emptyset",
    "\\emptysetoarr",
    "\\emptysetoarrl",
    "\\emptysetobar",
    "\\emptysetocirc",
    "\\enclosecircle",
    "\\enclosediamond",
    "\\enclosesquare",
    "\\enclosetriangle",
    "\\end",
    "\\endAboxed",
    "\\endash",
    "\\endcsname",
    "\\endgroup",
    "\\endinput",
    "\\endlinechar",
    "\\endlstlisting",
    "\\endtoggle",
    "\\endverbatim",
    "\\enlargethispage",
    "\\enleadertwodots",
    "\\enskip",
    "\\enspace",
    "\\ensuremath",
    "\\enumerate",
    "\\enumiiiname",
    "\\enumiiname",
    "\\enuminame",
    "\\enumivname",
    "\\eparsl",
    "\\epsilon",
    "\\epsilonup",
    "\\eq",
    "\\eqalign",
    "\\eqalignno",
    "\\eqcirc",
    "\\eqcolon",
    "\\eqdef",
    "\\eqdot",
    "\\eqeq",
    "\\eqeqeq",
    "\\eqgtr",
    "\\eqless",
    "\\eqnarray",
    "\\eqqcolon",
    "\\eqqgtr",
    "\\eqqless",
    "\\eqqplus",
    "\\eqqsim",
    "\\eqqslantgtr",
    "\\eqqslantless",
    "\\eqref",
    "\\eqsim",
    "\\eqslantgtr",
    "\\eqslantless",
    "\\equal",
    "\\equalleftarrow",
    "\\equalparallel",
    "\\equalrightarrow",
    "\\equalscolon",
    "\\equalscoloncolon",
    "\\equation",
    "\\equilibrium",
    "\\equiv",
    "\\equivDD",
    "\\equivVert",
    "\\equivVvert",
    "\\eqvparsl",
    "\\errbarblackcircle",
    "\\errbarblackdiamond",
    "\\errbarblacksquare",
    "\\errbarcircle",
    "\\errbardiamond",
    "\\errbarsquare",
    "\\errmessage",
    "\\errorcontextlines",
    "\\escapechar",
    "\\estimated",
    "\\estimates",
    "\\eta",
    "\\etaup",
    "\\eth",
    "\\euro",
    "\\evensidemargin",
    "\\everypar",
    "\\example",
    "\\exampleblock",
    "\\exclam",
    "\\exhyphenpenalty",
    "\\exi",
    "\\exist",
    "\\exists",
    "\\exp",
    "\\expandafter",
    "\\externaldocument",
    "\\externallabels",
    "\\externalref",
    "\\extrawidth",
    "\\fB",
    "\\fC",
    "\\fCenter",
    "\\fI",
    "\\fP",
    "\\fR",
    "\\fakelistoffigures",
    "\\fakelistoftables",
    "\\faketableofcontents",
    "\\falign",
    "\\fallingdotseq",
    "\\fam",
    "\\fancyfoot",
    "\\fancyhead",
    "\\fancyhf",
    "\\fancypagestyle",
    "\\fatsemi",
    "\\fbowtie",
    "\\fbox",
    "\\fboxrule",
    "\\fboxsep",
    "\\fcenter",
    "\\fcmp",
    "\\fcolorbox",
    "\\fdiagovnearrow",
    "\\fdiagovrdiag",
    "\\female",
    "\\ffun",
    "\\fi",
    "\\figure",
    "\\filbreak",
    "\\filecontents",
    "\\fill",
    "\\fillin",
    "\\fillwidthdottedlines",
    "\\fillwidthgrid",
    "\\fillwidthlines",
    "\\finalhyphendemerits",
    "\\finj",
    "\\fint",
    "\\firmlist",
    "\\firstchapteris",
    "\\firstpartis",
    "\\firstsectionis",
    "\\fisheye",
    "\\flalign",
    "\\flat",
    "\\flatfrac",
    "\\floatingpenalty",
    "\\floatname",
    "\\floatpagefraction",
    "\\floatplacement",
    "\\floatsep",
    "\\floatstyle",
    "\\fltns",
    "\\flushleft",
    "\\flushright",
    "\\fnsymbol",
    "\\fontencoding",
    "\\foo",
    "\\footnote",
    "\\footnotemark",
    "\\footnoterule",
    "\\footnotesep",
    "\\footnotesize",
    "\\footnotetext",
    "\\footskip",
    "\\forall",
    "\\forcesextra",
    "\\foreignlanguage",
    "\\forest",
    "\\forestset",
    "\\forks",
    "\\forksnot",
    "\\forkv",
    "\\fourth",
    "\\fourthroot",
    "\\fourvdots",
    "\\frac",
    "\\fracslash",
    "\\frak",
    "\\frakC",
    "\\frakZ",
    "\\frame",
    "\\framebox",
    "\\frameenv",
    "\\framesubtitle",
    "\\frametitle",
    "\\framezoom",
    "\\frenchspacing",
    "\\frontmatter",
    "\\frown",
    "\\frownie",
    "\\fullouterjoin",
    "\\fullwidth",
    "\\fun",
    "\\fussy",
    "\\futurelet",
    "\\gamma",
    "\\gammaup",
    "\\gather",
    "\\gathered",
    "\\gcd",
    "\\gdef",
    "\\ge",
    "\\gemini",
    "\\genfrac",
    "\\geometry",
    "\\geq",
    "\\geqq",
    "\\geqqslant",
    "\\geqslant",
    "\\gescc",
    "\\gesdot",
    "\\gesdoto",
    "\\gesdotol",
    "\\gesles",
    "\\gets",
    "\\gg",
    "\\ggcurly",
    "\\ggg",
    "\\gggnest",
    "\\gggtr",
    "\\gimel",
    "\\girl",
    "\\glE",
    "\\gla",
    "\\gleichstark",
    "\\glj",
    "\\global",
    "\\globaldefs",
    "\\globalfuture",
    "\\globallet",
    "\\globallong",
    "\\glossary",
    "\\glue",
    "\\gnapprox",
    "\\gneq",
    "\\gneqq",
    "\\gnsim",
    "\\goldA",
    "\\goldB",
    "\\goldC",
    "\\goldD",
    "\\goldE",
    "\\goodbreak",
    "\\gradientnabla",
    "\\graphicspath",
    "\\grave",
    "\\gray",
    "\\grayA",
    "\\grayB",
    "\\grayC",
    "\\grayColor",
    "\\grayD",
    "\\grayE",
    "\\grayF",
    "\\grayG",
    "\\grayH",
    "\\grayI",
    "\\greater",
    "\\greaterequivlnt",
    "\\greek",
    "\\green",
    "\\greenA",
    "\\greenB",
    "\\greenC",
    "\\greenD",
    "\\greenE",
    "\\gridSetup",
    "\\gsime",
    "\\gsiml",
    "\\gt",
    "\\gtcc",
    "\\gtcir",
    "\\gtlpar",
    "\\gtquest",
    "\\gtrapprox",
    "\\gtrarr",
    "\\gtrdot",
    "\\gtreqless",
    "\\gtreqqless",
    "\\gtrless",
    "\\gtrsim",
    "\\guillemotleft",
    "\\guillemotright",
    "\\guillmotleft",
    "\\guilsinglleft",
    "\\guilsinglright",
    "\\gvertneqq",
    "\\hArr",
    "\\hang",
    "\\hangafter",
    "\\hangindent",
    "\\happy",
    "\\harr",
    "\\harrowextender",
    "\\harvarditem",
    "\\hash",
    "\\hat",
    "\\hatapprox",
    "\\hbadness",
    "\\hbar",
    "\\hbox",
    "\\hdashline",
    "\\headheight",
    "\\headsep",
    "\\hearts",
    "\\heartsuit",
    "\\hermitconjmatrix",
    "\\hermitmatrix",
    "\\hexagon",
    "\\hexagonblack",
    "\\hfil",
    "\\hfill",
    "\\hfuzz",
    "\\hglue",
    "\\hide",
    "\\hideskip",
    "\\hknearrow",
    "\\hknwarrow",
    "\\hksearow",
    "\\hkswarow",
    "\\hlin",
    "\\hline",
    "\\hoffset",
    "\\holdinginserts",
    "\\hom",
    "\\homothetic",
    "\\hookleftarrow",
    "\\hookrightarrow",
    "\\horizbar",
    "\\hourglass",
    "\\house",
    "\\hphantom",
    "\\hrectangle",
    "\\hrectangleblack",
    "\\href",
    "\\hrule",
    "\\hsbColor",
    "\\hsize",
    "\\hskip",
    "\\hslash",
    "\\hspace",
    "\\hstrok",
    "\\html",
    "\\htmlClass",
    "\\htmlData",
    "\\htmlId",
    "\\htmlStyle",
    "\\htmladdimg",
    "\\htmladdnormallink",
    "\\htmladdtonavigation",
    "\\htmlfalse",
    "\\htmlhead",
    "\\htmlonly",
    "\\htmlref",
    "\\htmltrue",
    "\\huge",
    "\\hybull",
    "\\hyperbaseurl",
    "\\hypercalcbp",
    "\\hyperdef",
    "\\hyperimage",
    "\\hyperindexformat",
    "\\hyperlink",
    "\\hyperlinkappendixend",
    "\\hyperlinkappendixstart",
    "\\hyperlinkdocumentend",
    "\\hyperlinkdocumentstart",
    "\\hyperlinkframeend",
    "\\hyperlinkframeendprev",
    "\\hyperlinkframestart",
    "\\hyperlinkframestartnext",
    "\\hyperlinkmovie",
    "\\hyperlinkmute",
    "\\hyperlinkpresentationend",
    "\\hyperlinkpresentationstart",
    "\\hyperlinkslidenext",
    "\\hyperlinkslideprev",
    "\\hyperlinksound",
    "\\hyperpage",
    "\\hyperref",
    "\\hypersetup",
    "\\hypertarget",
    "\\hypertargetname",
    "\\hyphenation",
    "\\hyphenbullet",
    "\\hyphenpenalty",
    "\\hzigzag",
    "\\iddots",
    "\\idotsint",
    "\\if",
    "\\ifAlephTeX",
    "\\ifLuaHBTeX",
    "\\ifLuaTeX",
    "\\ifPDFTeX",
    "\\ifTUTeX",
    "\\ifVTeX",
    "\\ifXeTeX",
    "\\ifalephtex",
    "\\ifcase",
    "\\ifcat",
    "\\ifcsname",
    "\\ifdefined",
    "\\ifdim",
    "\\ifeTeX",
    "\\ifeof",
    "\\ifetex",
    "\\iff",
    "\\iffalse",
    "\\iffalses",
    "\\ifhbox",
    "\\ifhmode",
    "\\ifhtml",
    "\\ifinner",
    "\\iflanguage",
    "\\ifluahbtex",
    "\\ifluatex",
    "\\ifmmode",
    "\\ifnum",
    "\\ifodd",
    "\\ifpTeX",
    "\\ifpTeXng",
    "\\ifpdf",
    "\\ifpdftex",
    "\\ifplastex",
    "\\ifptex",
    "\\ifptexng",
    "\\ifthenelse",
    "\\iftrue",
    "\\iftrues",
    "\\iftutex",
    "\\ifupTeX",
    "\\ifuptex",
    "\\ifvbox",
    "\\ifvmode",
    "\\ifvoid",
    "\\ifvtex",
    "\\ifx",
    "\\ifxetex",
    "\\ii",
    "\\iiiint",
    "\\iiint",
    "\\iinfin",
    "\\iint",
    "\\ij",
    "\\image",
    "\\imageof",
    "\\imath",
    "\\impliedby",
    "\\implies",
    "\\in",
    "\\include",
    "\\includegraphics",
    "\\includeonly",
    "\\includeonlylecture",
    "\\increment",
    "\\incrementmtc",
    "\\incrementptc",
    "\\incrementstc",
    "\\indent",
    "\\index",
    "\\inf",
    "\\infin",
    "\\infty",
    "\\inj",
    "\\injlim",
    "\\input",
    "\\insertauthor",
    "\\insertnavigation",
    "\\insertsectionnavigation",
    "\\insertsectionnavigationhorizontal",
    "\\insertshortauthor",
    "\\insertshortdate",
    "\\insertshortinstitute",
    "\\insertshortpart",
    "\\insertshorttitle",
    "\\insertsubsectionnavigation",
    "\\insertsubsectionnavigationhorizontal",
    "\\insertverticalnavigation",
    "\\int",
    "\\intBar",
    "\\intbar",
    "\\intbottom",
    "\\intcap",
    "\\intclockwise",
    "\\intcup",
    "\\intercal",
    "\\interleave",
    "\\interlinepenalty",
    "\\internal",
    "\\intextender",
    "\\intextsep",
    "\\intlarhk",
    "\\intop",
    "\\intprod",
    "\\intprodr",
    "\\inttop",
    "\\intx",
    "\\invamp",
    "\\invdiameter",
    "\\inversebullet",
    "\\inversewhitecircle",
    "\\invisible",
    "\\invisibleenv",
    "\\invlazys",
    "\\invneg",
    "\\invnot",
    "\\invsmileface",
    "\\invwhitelowerhalfcircle",
    "\\invwhiteupperhalfcircle",
    "\\iota",
    "\\iotaup",
    "\\isin",
    "\\isinE",
    "\\isindot",
    "\\isinobar",
    "\\isins",
    "\\isinvb",
    "\\isodd",
    "\\isundefined",
    "\\it",
    "\\item",
    "\\itemindent",
    "\\itemize",
    "\\itemsep",
    "\\iterate",
    "\\itre",
    "\\itshape",
    "\\jj",
    "\\jmath",
    "\\jobname",
    "\\joinrel",
    "\\jot",
    "\\jupiter",
    "\\kaBlue",
    "\\kaGreen",
    "\\kappa",
    "\\kappaup",
    "\\ker",
    "\\kern",
    "\\kernelcontraction",
    "\\ket",
    "\\ketbra",
    "\\keywords",
    "\\koppa",
    "\\ktightmtcfalse",
    "\\ktightmtctrue",
    "\\lAngle",
    "\\lArr",
    "\\lBrace",
    "\\lBrack",
    "\\lParen",
    "\\lVert",
    "\\label",
    "\\labelcpageref",
    "\\labelcref",
    "\\labelitemi",
    "\\labelitemii",
    "\\labelitemiii",
    "\\labelitemiv",
    "\\labelsep",
    "\\labelwidth",
    "\\lambda",
    "\\lambdabar",
    "\\lambdaup",
    "\\land",
    "\\lang",
    "\\langle",
    "\\langledot",
    "\\language",
    "\\laplac",
    "\\large",
    "\\larr",
    "\\lasp",
    "\\lat",
    "\\late",
    "\\latexhtml",
    "\\latexonly",
    "\\lazysinv",
    "\\lbag",
    "\\lblkbrbrak",
    "\\lblot",
    "\\lbrace",
    "\\lbracelend",
    "\\lbracemid",
    "\\lbraceuend",
    "\\lbrack",
    "\\lbrackextender",
    "\\lbracklend",
    "\\lbracklltick",
    "\\lbrackubar",
    "\\lbrackuend",
    "\\lbrackultick",
    "\\lbrbrak",
    "\\lceil",
    "\\lcnamecref",
    "\\lcnamecrefs",
    "\\lcurvyangle",
    "\\ldotp",
    "\\ldots",
    "\\le",
    "\\leadsto",
    "\\leavevmode",
    "\\lecture",
    "\\left",
    "\\leftarrow",
    "\\leftarrowapprox",
    "\\leftarrowbackapprox",
    "\\leftarrowbsimilar",
    "\\leftarrowless",
    "\\leftarrowonoplus",
    "\\leftarrowplus",
    "\\leftarrowshortrightarrow",
    "\\leftarrowsimilar",
    "\\leftarrowsubset",
    "\\leftarrowtail",
    "\\leftarrowtriangle",
    "\\leftarrowx",
    "\\leftbarharpoon",
    "\\leftbkarrow",
    "\\leftbrace",
    "\\leftcurvedarrow",
    "\\leftdasharrow",
    "\\leftdbkarrow",
    "\\leftdbltail",
    "\\leftdotarrow",
    "\\leftdowncurvedarrow",
    "\\lefteqn",
    "\\leftfishtail",
    "\\leftharpoonaccent",
    "\\leftharpoondown",
    "\\leftharpoondownbar",
    "\\leftharpoonsupdown",
    "\\leftharpoonup",
    "\\leftharpoonupbar",
    "\\leftharpoonupdash",
    "\\lefthyphenmin",
    "\\leftleftarrows",
    "\\leftleftharpoons",
    "\\leftline",
    "\\leftmargin",
    "\\leftmark",
    "\\leftmoon",
    "\\leftouterjoin",
    "\\leftparen",
    "\\leftrightarrow",
    "\\leftrightarrowcircle",
    "\\leftrightarrows",
    "\\leftrightarrowtriangle",
    "\\leftrightharpoon",
    "\\leftrightharpoondown",
    "\\leftrightharpoondowndown",
    "\\leftrightharpoondownup",
    "\\leftrightharpoons",
    "\\leftrightharpoonsdown",
    "\\leftrightharpoonsup",
    "\\leftrightharpoonup",
    "\\leftrightharpoonupdown",
    "\\leftrightharpoonupup",
    "\\leftrightsquigarrow",
    "\\leftroot",
    "\\leftskip",
    "\\leftslice",
    "\\leftsquigarrow",
    "\\lefttail",
    "\\leftthreearrows",
    "\\leftthreetimes",
    "\\leftturn",
    "\\leftupdownharpoon",
    "\\leftwavearrow",
    "\\leftwhitearrow",
    "\\lemma",
    "\\lengthtest",
    "\\leo",
    "\\leq",
    "\\leqq",
    "\\leqqslant",
    "\\leqslant",
    "\\lescc",
    "\\lesdot",
    "\\lesdoto",
    "\\lesdotor",
    "\\lesges",
    "\\less",
    "\\lessapprox",
    "\\lessdot",
    "\\lesseqgtr",
    "\\lesseqqgtr",
    "\\lessequivlnt",
    "\\lessgtr",
    "\\lesssim",
    "\\let",
    "\\lfbowtie",
    "\\lfloor",
    "\\lftimes",
    "\\lg",
    "\\lgE",
    "\\lgathered",
    "\\lgblkcircle",
    "\\lgblksquare",
    "\\lgroup",
    "\\lgwhtcircle",
    "\\lgwhtsquare",
    "\\lhblk",
    "\\lhd",
    "\\libra",
    "\\lightning",
    "\\lim",
    "\\limg",
    "\\liminf",
    "\\limits",
    "\\limsup",
    "\\line",
    "\\linebreak",
    "\\linefeed",
    "\\linepenalty",
    "\\lineskip",
    "\\lineskipamount",
    "\\linewidth",
    "\\lipsum",
    "\\list",
    "\\listfiles",
    "\\listingsname",
    "\\listof",
    "\\listoffigures",
    "\\listoftables",
    "\\listparindent",
    "\\listsubcaptions",
    "\\ll",
    "\\llangle",
    "\\llap",
    "\\llarc",
    "\\llblacktriangle",
    "\\llbracket",
    "\\llcorner",
    "\\llcurly",
    "\\lll",
    "\\llless",
    "\\lllnest",
    "\\llparenthesis",
    "\\lltriangle",
    "\\lmidot",
    "\\lmoustache",
    "\\ln",
    "\\lnapprox",
    "\\lneq",
    "\\lneqq",
    "\\lnot",
    "\\lnsim",
    "\\log",
    "\\logo",
    "\\long",
    "\\longdashv",
    "\\longdivision",
    "\\longleftarrow",
    "\\longleftrightarrow",
    "\\longleftsquigarrow",
    "\\longmappedfrom",
    "\\longmapsfrom",
    "\\longmapsto",
    "\\longrightarrow",
    "\\longrightsquigarrow",
    "\\longtable",
    "\\loop",
    "\\looparrowleft",
    "\\looparrowright",
    "\\looseness",
    "\\lor",
    "\\lower",
    "\\lowint",
    "\\lozenge",
    "\\lozengeminus",
    "\\lparen",
    "\\lparenextender",
    "\\lparenlend",
    "\\lparenless",
    "\\lparenuend",
    "\\lq",
    "\\lrArr",
    "\\lrarc",
    "\\lrarr",
    "\\lrblacktriangle",
    "\\lrbox",
    "\\lrcorner",
    "\\lrtimes",
    "\\lrtriangle",
    "\\lrtriangleeq",
    "\\lsime",
    "\\lsimg",
    "\\lsqhook",
    "\\lstinline",
    "\\lstinputlisting",
    "\\lstlisting",
    "\\lstset",
    "\\lt",
    "\\ltcc",
    "\\ltcir",
    "\\ltimes",
    "\\ltlarr",
    "\\ltquest",
    "\\ltrivb",
    "\\lvboxline",
    "\\lvec",
    "\\lvert",
    "\\lvertneqq",
    "\\lvzigzag",
    "\\macron",
    "\\mag",
    "\\magstep",
    "\\magstephalf",
    "\\mainmatter",
    "\\makeatletter",
    "\\makeatother",
    "\\makebox",
    "\\makeemptybox",
    "\\makeglossary",
    "\\makeindex",
    "\\makelabel",
    "\\maketitle",
    "\\male",
    "\\maltese",
    "\\mappedfrom",
    "\\mapsdown",
    "\\mapsfrom",
    "\\mapsto",
    "\\mapsup",
    "\\marginnote",
    "\\marginpar",
    "\\marginparpush",
    "\\marginparsep",
    "\\marginparwidth",
    "\\marginpointname",
    "\\markboth",
    "\\marker",
    "\\markright",
    "\\maroonA",
    "\\maroonB",
    "\\maroonC",
    "\\maroonD",
    "\\maroonE",
    "\\math",
    "\\mathbb",
    "\\mathbcal",
    "\\mathbf",
    "\\mathbfit",
    "\\mathbfrak",
    "\\mathbin",
    "\\mathbit",
    "\\mathbold",
    "\\mathcal",
    "\\mathcent",
    "\\mathchar",
    "\\mathchardef",
    "\\mathchoice",
    "\\mathclap",
    "\\mathclose",
    "\\mathcolon",
    "\\mathdollar",
    "\\mathds",
    "\\mathellipsis",
    "\\matheth",
    "\\mathfrak",
    "\\mathindent",
    "\\mathinner",
    "\\mathit",
    "\\mathllap",
    "\\mathmakebox",
    "\\mathmbox",
    "\\mathmit",
    "\\mathnormal",
    "\\mathop",
    "\\mathopen",
    "\\mathord",
    "\\mathpunct",
    "\\mathratio",
    "\\mathrel",
    "\\mathring",
    "\\mathrlap",
    "\\mathrm",
    "\\mathscr",
    "\\mathsf",
    "\\mathsfbf",
    "\\mathsfbfit",
    "\\mathsfbfsl",
    "\\mathsfit",
    "\\mathsfsl",
    "\\mathslash",
    "\\mathsterling",
    "\\mathstrut",
    "\\mathsurround",
    "\\mathtip",
    "\\mathtoolsset",
    "\\mathtt",
    "\\matrix",
    "\\max",
    "\\maxdeadcycles",
    "\\maxdepth",
    "\\maxdimen",
    "\\mbfA",
    "\\mbfAlpha",
    "\\mbfB",
    "\\mbfBeta",
    "\\mbfC",
    "\\mbfChi",
    "\\mbfD",
    "\\mbfDelta",
    "\\mbfDigamma",
    "\\mbfE",
    "\\mbfEpsilon",
    "\\mbfEta",
    "\\mbfF",
    "\\mbfG",
    "\\mbfGamma",
    "\\mbfH",
    "\\mbfI",
    "\\mbfIota",
    "\\mbfJ",
    "\\mbfK",
    "\\mbfKappa",
    "\\mbfL",
    "\\mbfLambda",
    "\\mbfM",
    "\\mbfMu",
    "\\mbfN",
    "\\mbfNu",
    "\\mbfO",
    "\\mbfOmega",
    "\\mbfOmicron",
    "\\mbfP",
    "\\mbfPhi",
    "\\mbfPi",
    "\\mbfPsi",
    "\\mbfQ",
    "\\mbfR",
    "\\mbfRho",
    "\\mbfS",
    "\\mbfSigma",
    "\\mbfT",
    "\\mbfTau",
    "\\mbfTheta",
    "\\mbfU",
    "\\mbfUpsilon",
    "\\mbfV",
    "\\mbfW",
    "\\mbfX",
    "\\mbfXi",
    "\\mbfY",
    "\\mbfZ",
    "\\mbfZeta",
    "\\mbfa",
    "\\mbfalpha",
    "\\mbfb",
    "\\mbfbeta",
    "\\mbfc",
    "\\mbfchi",
    "\\mbfd",
    "\\mbfdelta",
    "\\mbfdigamma",
    "\\mbfe",
    "\\mbfepsilon",
    "\\mbfeta",
    "\\mbff",
    "\\mbffrakA",
    "\\mbffrakB",
    "\\mbffrakC",
    "\\mbffrakD",
    "\\mbffrakE",
    "\\mbffrakF",
    "\\mbffrakG",
    "\\mbffrakH",
    "\\mbffrakI",
    "\\mbffrakJ",
    "\\mbffrakK",
    "\\mbffrakL",
    "\\mbffrakM",
    "\\mbffrakN",
    "\\mbffrakO",
    "\\mbffrakP",
    "\\mbffrakQ",
    "\\mbffrakR",
    "\\mbffrakS",
    "\\mbffrakT",
    "\\mbffrakU",
    "\\mbffrakV",
    "\\mbffrakW",
    "\\mbffrakX",
    "\\mbffrakY",
    "\\mbffrakZ",
    "\\mbffraka",
    "\\mbffrakb",
    "\\mbffrakc",
    "\\mbffrakd",
    "\\mbffrake",
    "\\mbffrakf",
    "\\mbffrakg",
    "\\mbffrakh",
    "\\mbffraki",
    "\\mbffrakj",
    "\\mbffrakk",
    "\\mbffrakl",
    "\\mbffrakm",
    "\\mbffrakn",
    "\\mbffrako",
    "\\mbffrakp",
    "\\mbffrakq",
    "\\mbffrakr",
    "\\mbffraks",
    "\\mbffrakt",
    "\\mbffraku",
    "\\mbffrakv",
    "\\mbffrakw",
    "\\mbffrakx",
    "\\mbffraky",
    "\\mbffrakz",
    "\\mbfg",
    "\\mbfgamma",
    "\\mbfh",
    "\\mbfi",
    "\\mbfiota",
    "\\mbfitA",
    "\\mbfitAlpha",
    "\\mbfitB",
    "\\mbfitBeta",
    "\\mbfitC",
    "\\mbfitChi",
    "\\mbfitD",
    "\\mbfitDelta",
    "\\mbfitE",
    "\\mbfitEpsilon",
    "\\mbfitEta",
    "\\mbfitF",
    "\\mbfitG",
    "\\mbfitGamma",
    "\\mbfitH",
    "\\mbfitI",
    "\\mbfitIota",
    "\\mbfitJ",
    "\\mbfitK",
    "\\mbfitKappa",
    "\\mbfitL",
    "\\mbfitLambda",
    "\\mbfitM",
    "\\mbfitMu",
    "\\mbfitN",
    "\\mbfitNu",
    "\\mbfitO",
    "\\mbfitOmega",
    "\\mbfitOmicron",
    "\\mbfitP",
    "\\mbfitPhi",
    "\\mbfitPi",
    "\\mbfitPsi",
    "\\mbfitQ",
    "\\mbfitR",
    "\\mbfitRho",
    "\\mbfitS",
    "\\mbfitSigma",
    "\\mbfitT",
    "\\mbfitTau",
    "\\mbfitTheta",
    "\\mbfitU",
    "\\mbfitUpsilon",
    "\\mbfitV",
    "\\mbfitW",
    "\\mbfitX",
    "\\mbfitXi",
    "\\mbfitY",
    "\\mbfitZ",
    "\\mbfitZeta",
    "\\mbfita",
    "\\mbfitalpha",
    "\\mbfitb",
    "\\mbfitbeta",
    "\\mbfitc",
    "\\mbfitchi",
    "\\mbfitd",
    "\\mbfitdelta",
    "\\mbfite",
    "\\mbfitepsilon",
    "\\mbfiteta",
    "\\mbfitf",
    "\\mbfitg",
    "\\mbfitgamma",
    "\\mbfith",
    "\\mbfiti",
    "\\mbfitiota",
    "\\mbfitj",
    "\\mbfitk",
    "\\mbfitkappa",
    "\\mbfitl",
    "\\mbfitlambda",
    "\\mbfitm",
    "\\mbfitmu",
    "\\mbfitn",
    "\\mbfitnabla",
    "\\mbfitnu",
    "\\mbfito",
    "\\mbfitomega",
    "\\mbfitomicron",
    "\\mbfitp",
    "\\mbfitpartial",
    "\\mbfitphi",
    "\\mbfitpi",
    "\\mbfitpsi",
    "\\mbfitq",
    "\\mbfitr",
    "\\mbfitrho",
    "\\mbfits",
    "\\mbfitsansA",
    "\\mbfitsansAlpha",
    "\\mbfitsansB",
    "\\mbfitsansBeta",
    "\\mbfitsansC",
    "\\mbfitsansChi",
    "\\mbfitsansD",
    "\\mbfitsansDelta",
    "\\mbfitsansE",
    "\\mbfitsansEpsilon",
    "\\mbfitsansEta",
    "\\mbfitsansF",
    "\\mbfitsansG",
    "\\mbfitsansGamma",
    "\\mbfitsansH",
    "\\mbfitsansI",
    "\\mbfitsansIota",
    "\\mbfitsansJ",
    "\\mbfitsansK",
    "\\mbfitsansKappa",
    "\\mbfitsansL",
    "\\mbfitsansLambda",
    "\\mbfitsansM",
    "\\mbfitsansMu",
    "\\mbfitsansN",
    "\\mbfitsansNu",
    "\\mbfitsansO",
    "\\mbfitsansOmega",
    "\\mbfitsansOmicron",
    "\\mbfitsansP",
    "\\mbfitsansPhi",
    "\\mbfitsansPi",
    "\\mbfitsansPsi",
    "\\mbfitsansQ",
    "\\mbfitsansR",
    "\\mbfitsansRho",
    "\\mbfitsansS",
    "\\mbfitsansSigma",
    "\\mbfitsansT",
    "\\mbfitsansTau",
    "\\mbfitsansTheta",
    "\\mbfitsansU",
    "\\mbfitsansUpsilon",
    "\\mbfitsansV",
    "\\mbfitsansW",
    "\\mbfitsansX",
    "\\mbfitsansXi",
    "\\mbfitsansY",
    "\\mbfitsansZ",
    "\\mbfitsansZeta",
    "\\mbfitsansa",
    "\\mbfitsansalpha",
    "\\mbfitsansb",
    "\\mbfitsansbeta",
    "\\mbfitsansc",
    "\\mbfitsanschi",
    "\\mbfitsansd",
    "\\mbfitsansdelta",
    "\\mbfitsanse",
    "\\mbfitsansepsilon",
    "\\mbfitsanseta",
    "\\mbfitsansf",
    "\\mbfitsansg",
    "\\mbfitsansgamma",
    "\\mbfitsansh",
    "\\mbfitsansi",
    "\\mbfitsansiota",
    "\\mbfitsansj",
    "\\mbfitsansk",
    "\\mbfitsanskappa",
    "\\mbfitsansl",
    "\\mbfitsanslambda",
    "\\mbfitsansm",
    "\\mbfitsansmu",
    "\\mbfitsansn",
    "\\mbfitsansnabla",
    "\\mbfitsansnu",
    "\\mbfitsanso",
    "\\mbfitsansomega",
    "\\mbfitsansomicron",
    "\\mbfitsansp",
    "\\mbfitsanspartial",
    "\\mbfitsansphi",
    "\\mbfitsanspi",
    "\\mbfitsanspsi",
    "\\mbfitsansq",
    "\\mbfitsansr",
    "\\mbfitsansrho",
    "\\mbfitsanss",
    "\\mbfitsanssigma",
    "\\mbfitsanst",
    "\\mbfitsanstau",
    "\\mbfitsanstheta",
    "\\mbfitsansu",
    "\\mbfitsansupsilon",
    "\\mbfitsansv",
    "\\mbfitsansvarTheta",
    "\\mbfitsansvarepsilon",
    "\\mbfitsansvarkappa",
    "\\mbfitsansvarphi",
    "\\mbfitsansvarpi",
    "\\mbfitsansvarrho",
    "\\mbfitsansvarsigma",
    "\\mbfitsansvartheta",
    "\\mbfitsansw",
    "\\mbfitsansx",
    "\\mbfitsansxi",
    "\\mbfitsansy",
    "\\mbfitsansz",
    "\\mbfitsanszeta",
    "\\mbfitsigma",
    "\\mbfitt",
    "\\mbfittau",
    "\\mbfittheta",
    "\\mbfitu",
    "\\mbfitupsilon",
    "\\mbfitv",
    "\\mbfitvarTheta",
    "\\mbfitvarepsilon",
    "\\mbfitvarkappa",
    "\\mbfitvarphi",
    "\\mbfitvarpi",
    "\\mbfitvarrho",
    "\\mbfitvarsigma",
    "\\mbfitvartheta",
    "\\mbfitw",
    "\\mbfitx",
    "\\mbfitxi",
    "\\mbfity",
    "\\mbfitz",
    "\\mbfitzeta",
    "\\mbfj",
    "\\mbfk",
    "\\mbfkappa",
    "\\mbfl",
    "\\mbflambda",
    "\\mbfm",
    "\\mbfmu",
    "\\mbfn",
    "\\mbfnabla",
    "\\mbfnu",
    "\\mbfo",
    "\\mbfomega",
    "\\mbfomicron",
    "\\mbfp",
    "\\mbfpartial",
    "\\mbfphi",
    "\\mbfpi",
    "\\mbfpsi",
    "\\mbfq",
    "\\mbfr",
    "\\mbfrho",
    "\\mbfs",
    "\\mbfsansA",
    "\\mbfsansAlpha",
    "\\mbfsansB",
    "\\mbfsansBeta",
    "\\mbfsansC",
    "\\mbfsansChi",
    "\\mbfsansD",
    "\\mbfsansDelta",
    "\\mbfsansE",
    "\\mbfsansEpsilon",
    "\\mbfsansEta",
    "\\mbfsansF",
    "\\mbfsansG",
    "\\mbfsansGamma",
    "\\mbfsansH",
    "\\mbfsansI",
    "\\mbfsansIota",
    "\\mbfsansJ",
    "\\mbfsansK",
    "\\mbfsansKappa",
    "\\mbfsansL",
    "\\mbfsansLambda",
    "\\mbfsansM",
    "\\mbfsansMu",
    "\\mbfsansN",
    "\\mbfsansNu",
    "\\mbfsansO",
    "\\mbfsansOmega",
    "\\mbfsansOmicron",
    "\\mbfsansP",
    "\\mbfsansPhi",
    "\\mbfsansPi",
    "\\mbfsansPsi",
    "\\mbfsansQ",
    "\\mbfsansR",
    "\\mbfsansRho",
    "\\mbfsansS",
    "\\mbfsansSigma",
    "\\mbfsansT",
    "\\mbfsansTau",
    "\\mbfsansTheta",
    "\\mbfsansU",
    "\\mbfsansUpsilon",
    "\\mbfsansV",
    "\\mbfsansW",
    "\\mbfsansX",
    "\\mbfsansXi",
    "\\mbfsansY",
    "\\mbfsansZ",
    "\\mbfsansZeta",
    "\\mbfsansa",
    "\\mbfsansalpha",
    "\\mbfsansb",
    "\\mbfsansbeta",
    "\\mbfsansc",
    "\\mbfsanschi",
    "\\mbfsansd",
    "\\mbfsansdelta",
    "\\mbfsanse",
    "\\mbfsanseight",
    "\\mbfsansepsilon",
    "\\mbfsanseta",
    "\\mbfsansf",
    "\\mbfsansfive",
    "\\mbfsansfour",
    "\\mbfsansg",
    "\\mbfsansgamma",
    "\\mbfsansh",
    "\\mbfsansi",
    "\\mbfsansiota",
    "\\mbfsansj",
    "\\mbfsansk",
    "\\mbfsanskappa",
    "\\mbfsansl",
    "\\mbfsanslambda",
    "\\mbfsansm",
    "\\mbfsansmu",
    "\\mbfsansn",
    "\\mbfsansnabla",
    "\\mbfsansnine",
    "\\mbfsansnu",
    "\\mbfsanso",
    "\\mbfsansomega",
    "\\mbfsansomicron",
    "\\mbfsansone",
    "\\mbfsansp",
    "\\mbfsanspartial",
    "\\mbfsansphi",
    "\\mbfsanspi",
    "\\mbfsanspsi",
    "\\mbfsansq",
    "\\mbfsansr",
    "\\mbfsansrho",
    "\\mbfsanss",
    "\\mbfsansseven",
    "\\mbfsanssigma",
    "\\mbfsanssix",
    "\\mbfsanst",
    "\\mbfsanstau",
    "\\mbfsanstheta",
    "\\mbfsansthree",
    "\\mbfsanstwo",
    "\\mbfsansu",
    "\\mbfsansupsilon",
    "\\mbfsansv",
    "\\mbfsansvarTheta",
    "\\mbfsansvarepsilon",
    "\\mbfsansvarkappa",
    "\\mbfsansvarphi",
    "\\mbfsansvarpi",
    "\\mbfsansvarrho",
    "\\mbfsansvarsigma",
    "\\mbfsansvartheta",
    "\\mbfsansw",
    "\\mbfsansx",
    "\\mbfsansxi",
    "\\mbfsansy",
    "\\mbfsansz",
    "\\mbfsanszero",
    "\\mbfsanszeta",
    "\\mbfscrA",
    "\\mbfscrB",
    "\\mbfscrC",
    "\\mbfscrD",
    "\\mbfscrE",
    "\\mbfscrF",
    "\\mbfscrG",
    "\\mbfscrH",
    "\\mbfscrI",
    "\\mbfscrJ",
    "\\mbfscrK",
    "\\mbfscrL",
    "\\mbfscrM",
    "\\mbfscrN",
    "\\mbfscrO",
    "\\mbfscrP",
    "\\mbfscrQ",
    "\\mbfscrR",
    "\\mbfscrS",
    "\\mbfscrT",
    "\\mbfscrU",
    "\\mbfscrV",
    "\\mbfscrW",
    "\\mbfscrX",
    "\\mbfscrY",
    "\\mbfscrZ",
    "\\mbfscra",
    "\\mbfscrb",
    "\\mbfscrc",
    "\\mbfscrd",
    "\\mbfscre",
    "\\mbfscrf",
    "\\mbfscrg",
    "\\mbfscrh",
    "\\mbfscri",
    "\\mbfscrj",
    "\\mbfscrk",
    "\\mbfscrl",
    "\\mbfscrm",
    "\\mbfscrn",
    "\\mbfscro",
    "\\mbfscrp",
    "\\mbfscrq",
    "\\mbfscrr",
    "\\mbfscrs",
    "\\mbfscrt",
    "\\mbfscru",
    "\\mbfscrv",
    "\\mbfscrw",
    "\\mbfscrx",
    "\\mbfscry",
    "\\mbfscrz",
    "\\mbfsigma",
    "\\mbft",
    "\\mbftau",
    "\\mbftheta",
    "\\mbfu",
    "\\mbfupsilon",
    "\\mbfv",
    "\\mbfvarTheta",
    "\\mbfvarepsilon",
    "\\mbfvarkappa",
    "\\mbfvarphi",
    "\\mbfvarpi",
    "\\mbfvarrho",
    "\\mbfvarsigma",
    "\\mbfvartheta",
    "\\mbfw",
    "\\mbfx",
    "\\mbfxi",
    "\\mbfy",
    "\\mbfz",
    "\\mbfzeta",
    "\\mbox",
    "\\mdblkcircle",
    "\\mdblkdiamond",
    "\\mdblklozenge",
    "\\mdblksquare",
    "\\mdlgblkcircle",
    "\\mdlgblkdiamond",
    "\\mdlgblklozenge",
    "\\mdlgblksquare",
    "\\mdlgwhtcircle",
    "\\mdlgwhtdiamond",
    "\\mdlgwhtlozenge",
    "\\mdlgwhtsquare",
    "\\mdseries",
    "\\mdsmblkcircle",
    "\\mdsmblksquare",
    "\\mdsmwhtcircle",
    "\\mdsmwhtsquare",
    "\\mdwhtcircle",
    "\\mdwhtdiamond",
    "\\mdwhtlozenge",
    "\\mdwhtsquare",
    "\\measangledltosw",
    "\\measangledrtose",
    "\\measangleldtosw",
    "\\measanglelutonw",
    "\\measanglerdtose",
    "\\measanglerutone",
    "\\measangleultonw",
    "\\measangleurtone",
    "\\measeq",
    "\\measuredangle",
    "\\measuredangleleft",
    "\\measuredrightangle",
    "\\medblackstar",
    "\\medbreak",
    "\\medbullet",
    "\\medcirc",
    "\\medmuskip",
    "\\medskip",
    "\\medskipamount",
    "\\medspace",
    "\\medwhitestar",
    "\\mercury",
    "\\merge",
    "\\message",
    "\\mfrakA",
    "\\mfrakB",
    "\\mfrakC",
    "\\mfrakD",
    "\\mfrakE",
    "\\mfrakF",
    "\\mfrakG",
    "\\mfrakH",
    "\\mfrakJ",
    "\\mfrakK",
    "\\mfrakL",
    "\\mfrakM",
    "\\mfrakN",
    "\\mfrakO",
    "\\mfrakP",
    "\\mfrakQ",
    "\\mfrakS",
    "\\mfrakT",
    "\\mfrakU",
    "\\mfrakV",
    "\\mfrakW",
    "\\mfrakX",
    "\\mfrakY",
    "\\mfrakZ",
    "\\mfraka",
    "\\mfrakb",
    "\\mfrakc",
    "\\mfrakd",
    "\\mfrake",
    "\\mfrakf",
    "\\mfrakg",
    "\\mfrakh",
    "\\mfraki",
    "\\mfrakj",
    "\\mfrakk",
    "\\mfrakl",
    "\\mfrakm",
    "\\mfrakn",
    "\\mfrako",
    "\\mfrakp",
    "\\mfrakq",
    "\\mfrakr",
    "\\mfraks",
    "\\mfrakt",
    "\\mfraku",
    "\\mfrakv",
    "\\mfrakw",
    "\\mfrakx",
    "\\mfraky",
    "\\mfrakz",
    "\\mho",
    "\\mid",
    "\\midbarvee",
    "\\midbarwedge",
    "\\midcir",
    "\\middle",
    "\\min",
    "\\minCDarrowheight",
    "\\minCDarrowwidth",
    "\\minilof",
    "\\minilot",
    "\\minipage",
    "\\minitoc",
    "\\mintA",
    "\\mintB",
    "\\mintC",
    "\\minus",
    "\\minuscolon",
    "\\minuscoloncolon",
    "\\minusdot",
    "\\minusfdots",
    "\\minuso",
    "\\minusrdots",
    "\\mit",
    "\\mitA",
    "\\mitAlpha",
    "\\mitB",
    "\\mitBbbD",
    "\\mitBbbd",
    "\\mitBbbe",
    "\\mitBbbi",
    "\\mitBbbj",
    "\\mitBeta",
    "\\mitC",
    "\\mitChi",
    "\\mitD",
    "\\mitDelta",
    "\\mitE",
    "\\mitEpsilon",
    "\\mitEta",
    "\\mitF",
    "\\mitG",
    "\\mitGamma",
    "\\mitH",
    "\\mitI",
    "\\mitIota",
    "\\mitJ",
    "\\mitK",
    "\\mitKappa",
    "\\mitL",
    "\\mitLambda",
    "\\mitM",
    "\\mitMu",
    "\\mitN",
    "\\mitNu",
    "\\mitO",
    "\\mitOmega",
    "\\mitOmicron",
    "\\mitP",
    "\\mitPhi",
    "\\mitPi",
    "\\mitPsi",
    "\\mitQ",
    "\\mitR",
    "\\mitRho",
    "\\mitS",
    "\\mitSigma",
    "\\mitT",
    "\\mitTau",
    "\\mitTheta",
    "\\mitU",
    "\\mitUpsilon",
    "\\mitV",
    "\\mitW",
    "\\mitX",
    "\\mitXi",
    "\\mitY",
    "\\mitZ",
    "\\mitZeta",
    "\\mita",
    "\\mitalpha",
    "\\mitb",
    "\\mitbeta",
    "\\mitc",
    "\\mitchi",
    "\\mitd",
    "\\mitdelta",
    "\\mite",
    "\\mitepsilon",
    "\\miteta",
    "\\mitf",
    "\\mitg",
    "\\mitgamma",
    "\\miti",
    "\\mitiota",
    "\\mitj",
    "\\mitk",
    "\\mitkappa",
    "\\mitl",
    "\\mitlambda",
    "\\mitm",
    "\\mitmu",
    "\\mitn",
    "\\mitnabla",
    "\\mitnu",
    "\\mito",
    "\\mitomega",
    "\\mitomicron",
    "\\mitp",
    "\\mitpartial",
    "\\mitphi",
    "\\mitpi",
    "\\mitpsi",
    "\\mitq",
    "\\mitr",
    "\\mitrho",
    "\\mits",
    "\\mitsansA",
    "\\mitsansB",
    "\\mitsansC",
    "\\mitsansD",
    "\\mitsansE",
    "\\mitsansF",
    "\\mitsansG",
    "\\mitsansH",
    "\\mitsansI",
    "\\mitsansJ",
    "\\mitsansK",
    "\\mitsansL",
    "\\mitsansM",
    "\\mitsansN",
    "\\mitsansO",
    "\\mitsansP",
    "\\mitsansQ",
    "\\mitsansR",
    "\\mitsansS",
    "\\mitsansT",
    "\\mitsansU",
    "\\mitsansV",
    "\\mitsansW",
    "\\mitsansX",
    "\\mitsansY",
    "\\mitsansZ",
    "\\mitsansa",
    "\\mitsansb",
    "\\mitsansc",
    "\\mitsansd",
    "\\mitsanse",
    "\\mitsansf",
    "\\mitsansg",
    "\\mitsansh",
    "\\mitsansi",
    "\\mitsansj",
    "\\mitsansk",
    "\\mitsansl",
    "\\mitsansm",
    "\\mitsansn",
    "\\mitsanso",
    "\\mitsansp",
    "\\mitsansq",
    "\\mitsansr",
    "\\mitsanss",
    "\\mitsanst",
    "\\mitsansu",
    "\\mitsansv",
    "\\mitsansw",
    "\\mitsansx",
    "\\mitsansy",
    "\\mitsansz",
    "\\mitsigma",
    "\\mitt",
    "\\mittau",
    "\\mittheta",
    "\\mitu",
    "\\mitupsilon",
    "\\mitv",
    "\\mitvarTheta",
    "\\mitvarepsilon",
    "\\mitvarkappa",
    "\\mitvarphi",
    "\\mitvarpi",
    "\\mitvarrho",
    "\\mitvarsigma",
    "\\mitvartheta",
    "\\mitw",
    "\\mitx",
    "\\mitxi",
    "\\mity",
    "\\mitz",
    "\\mitzeta",
    "\\mkern",
    "\\mlcp",
    "\\mldr",
    "\\mlfpagenumbers",
    "\\mlfrule",
    "\\mlftitle",
    "\\mltpagenumbers",
    "\\mltrule",
    "\\mlttitle",
    "\\mmlToken",
    "\\mod",
    "\\mode",
    "\\models",
    "\\modtwosum",
    "\\month",
    "\\moveleft",
    "\\moveright",
    "\\movesupsub",
    "\\movie",
    "\\mp",
    "\\mqty",
    "\\msansA",
    "\\msansB",
    "\\msansC",
    "\\msansD",
    "\\msansE",
    "\\msansF",
    "\\msansG",
    "\\msansH",
    "\\msansI",
    "\\msansJ",
    "\\msansK",
    "\\msansL",
    "\\msansM",
    "\\msansN",
    "\\msansO",
    "\\msansP",
    "\\msansQ",
    "\\msansR",
    "\\msansS",
    "\\msansT",
    "\\msansU",
    "\\msansV",
    "\\msansW",
    "\\msansX",
    "\\msansY",
    "\\msansZ",
    "\\msansa",
    "\\msansb",
    "\\msansc",
    "\\msansd",
    "\\msanse",
    "\\msanseight",
    "\\msansf",
    "\\msansfive",
    "\\msansfour",
    "\\msansg",
    "\\msansh",
    "\\msansi",
    "\\msansj",
    "\\msansk",
    "\\msansl",
    "\\msansm",
    "\\msansn",
    "\\msansnine",
    "\\msanso",
    "\\msansone",
    "\\msansp",
    "\\msansq",
    "\\msansr",
    "\\msanss",
    "\\msansseven",
    "\\msanssix",
    "\\msanst",
    "\\msansthree",
    "\\msanstwo",
    "\\msansu",
    "\\msansv",
    "\\msansw",
    "\\msansx",
    "\\msansy",
    "\\msansz",
    "\\msanszero",
    "\\mscrA",
    "\\mscrB",
    "\\mscrC",
    "\\mscrD",
    "\\mscrE",
    "\\mscrF",
    "\\mscrG",
    "\\mscrH",
    "\\mscrI",
    "\\mscrJ",
    "\\mscrK",
    "\\mscrL",
    "\\mscrM",
    "\\mscrN",
    "\\mscrO",
    "\\mscrP",
    "\\mscrQ",
    "\\mscrR",
    "\\mscrS",
    "\\mscrT",
    "\\mscrU",
    "\\mscrV",
    "\\mscrW",
    "\\mscrX",
    "\\mscrY",
    "\\mscrZ",
    "\\mscra",
    "\\mscrb",
    "\\mscrc",
    "\\mscrd",
    "\\mscre",
    "\\mscrf",
    "\\mscrg",
    "\\mscrh",
    "\\mscri",
    "\\mscrj",
    "\\mscrk",
    "\\mscrl",
    "\\mscrm",
    "\\mscrn",
    "\\mscro",
    "\\mscrp",
    "\\mscrq",
    "\\mscrr",
    "\\mscrs",
    "\\mscrt",
    "\\mscru",
    "\\mscrv",
    "\\mscrw",
    "\\mscrx",
    "\\mscry",
    "\\mscrz",
    "\\mskip",
    "\\mspace",
    "\\mtcaddchapter",
    "\\mtcaddpart",
    "\\mtcaddsection",
    "\\mtcfixglossary",
    "\\mtcfixindex",
    "\\mtcpagenumbers",
    "\\mtcprepare",
    "\\mtcrule",
    "\\mtcselectlanguage",
    "\\mtcsetdepth",
    "\\mtcsetfeature",
    "\\mtcsetfont",
    "\\mtcsetformat",
    "\\mtcsetpagenumbers",
    "\\mtcsetrules",
    "\\mtcsettitle",
    "\\mtcsettitlefont",
    "\\mtcskip",
    "\\mtcskipammount",
    "\\mtctitle",
    "\\mttA",
    "\\mttB",
    "\\mttC",
    "\\mttD",
    "\\mttE",
    "\\mttF",
    "\\mttG",
    "\\mttH",
    "\\mttI",
    "\\mttJ",
    "\\mttK",
    "\\mttL",
    "\\mttM",
    "\\mttN",
    "\\mttO",
    "\\mttP",
    "\\mttQ",
    "\\mttR",
    "\\mttS",
    "\\mttT",
    "\\mttU",
    "\\mttV",
    "\\mttW",
    "\\mttX",
    "\\mttY",
    "\\mttZ",
    "\\mtta",
    "\\mttb",
    "\\mttc",
    "\\mttd",
    "\\mtte",
    "\\mtteight",
    "\\mttf",
    "\\mttfive",
    "\\mttfour",
    "\\mttg",
    "\\mtth",
    "\\mtti",
    "\\mttj",
    "\\mttk",
    "\\mttl",
    "\\mttm",
    "\\mttn",
    "\\mttnine",
    "\\mtto",
    "\\mttone",
    "\\mttp",
    "\\mttq",
    "\\mttr",
    "\\mtts",
    "\\mttseven",
    "\\mttsix",
    "\\mttt",
    "\\mttthree",
    "\\mtttwo",
    "\\mttu",
    "\\mttv",
    "\\mttw",
    "\\mttx",
    "\\mtty",
    "\\mttz",
    "\\mttzero",
    "\\mu",
    "\\mudimen",
    "\\muglue",
    "\\multicols",
    "\\multicolumn",
    "\\multiinclude",
    "\\multiline",
    "\\multilined",
    "\\multimap",
    "\\multimapboth",
    "\\multimapdotbothA",
    "\\multimapdotbothB",
    "\\multimapinv",
    "\\multline",
    "\\multlined",
    "\\muup",
    "\\mymacro",
    "\\nHdownarrow",
    "\\nHuparrow",
    "\\nLeftarrow",
    "\\nLeftrightarrow",
    "\\nRightarrow",
    "\\nVDash",
    "\\nVdash",
    "\\nVleftarrow",
    "\\nVleftarrowtail",
    "\\nVleftrightarrow",
    "\\nVrightarrow",
    "\\nVrightarrowtail",
    "\\nVtwoheadleftarrow",
    "\\nVtwoheadleftarrowtail",
    "\\nVtwoheadrightarrow",
    "\\nVtwoheadrightarrowtail",
    "\\nabla",
    "\\nameCref",
    "\\nameCrefs",
    "\\namecref",
    "\\namecrefs",
    "\\nameref",
    "\\napprox",
    "\\narrower",
    "\\nasymp",
    "\\natnums",
    "\\natural",
    "\\nbs",
    "\\ncong",
    "\\ndownarrow",
    "\\ndres",
    "\\ne",
    "\\nearrow",
    "\\neg",
    "\\negmedspace",
    "\\negthickspace",
    "\\negthinspace",
    "\\neovnwarrow",
    "\\neovsearrow",
    "\\neptune",
    "\\neq",
    "\\nequiv",
    "\\neswarrow",
    "\\neuter",
    "\\newblock",
    "\\newboolean",
    "\\newbox",
    "\\newcommand",
    "\\newcount",
    "\\newcounter",
    "\\newdimen",
    "\\newenvironment",
    "\\newfam",
    "\\newfloat",
    "\\newfont",
    "\\newgathered",
    "\\newhelp",
    "\\newif",
    "\\newifs",
    "\\newlanguage",
    "\\newlength",
    "\\newline",
    "\\newlinechar",
    "\\newmuskip",
    "\\newpage",
    "\\newread",
    "\\newsavebox",
    "\\newskip",
    "\\newsubfloat",
    "\\newtagform",
    "\\newtheorem",
    "\\newtheoremstyle",
    "\\newtie",
    "\\newtoks",
    "\\newwrite",
    "\\nexi",
    "\\nexists",
    "\\ng",
    "\\ngeq",
    "\\ngeqq",
    "\\ngeqslant",
    "\\ngtr",
    "\\ngtrless",
    "\\ngtrsim",
    "\\nhVvert",
    "\\nhpar",
    "\\ni",
    "\\nin",
    "\\niobar",
    "\\nis",
    "\\nisd",
    "\\nldr",
    "\\nleftarrow",
    "\\nleftrightarrow",
    "\\nleq",
    "\\nleqq",
    "\\nleqslant",
    "\\nless",
    "\\nlessgtr",
    "\\nlesssim",
    "\\nmid",
    "\\nni",
    "\\nobreak",
    "\\nobreakdash",
    "\\nobreakspace",
    "\\nochangebars",
    "\\nocite",
    "\\noexpand",
    "\\nofiles",
    "\\noindent",
    "\\nointerlineskip",
    "\\nolimits",
    "\\nolinebreak",
    "\\nolinkurl",
    "\\nomlfpagenumbers",
    "\\nomlfrule",
    "\\nomltpagenumbers",
    "\\nomltrule",
    "\\nomtcpagenumbers",
    "\\nomtcrule",
    "\\nonfrenchspacing",
    "\\nonstopmode",
    "\\nonumber",
    "\\nopagebreak",
    "\\nopagecolor",
    "\\noplfpagenumbers",
    "\\noplfrule",
    "\\nopltpagenumbers",
    "\\nopltrule",
    "\\noptcpagenumbers",
    "\\noptcrule",
    "\\normalbaselines",
    "\\normalcolor",
    "\\normalfont",
    "\\normalmarginpar",
    "\\normalsize",
    "\\noslfpagenumbers",
    "\\noslfrule",
    "\\nosltpagenumbers",
    "\\nosltrule",
    "\\nostcpagenumbers",
    "\\nostcrule",
    "\\not",
    "\\notag",
    "\\notasymp",
    "\\notbackslash",
    "\\notgreaterless",
    "\\notin",
    "\\notlessgreater",
    "\\notni",
    "\\notowner",
    "\\notowns",
    "\\notslash",
    "\\notsmallowns",
    "\\nparallel",
    "\\npolint",
    "\\nprec",
    "\\npreccurlyeq",
    "\\npreceq",
    "\\nrightarrow",
    "\\nrres",
    "\\nshortmid",
    "\\nshortparallel",
    "\\nsim",
    "\\nsime",
    "\\nsimeq",
    "\\nsqsubseteq",
    "\\nsqsupseteq",
    "\\nsubset",
    "\\nsubseteq",
    "\\nsubseteqq",
    "\\nsucc",
    "\\nsucccurlyeq",
    "\\nsucceq",
    "\\nsupset",
    "\\nsupseteq",
    "\\nsupseteqq",
    "\\ntriangleleft",
    "\\ntrianglelefteq",
    "\\ntriangleright",
    "\\ntrianglerighteq",
    "\\nu",
    "\\null",
    "\\nulldelimiterspace",
    "\\number",
    "\\numberwithin",
    "\\nument",
    "\\nunlhd",
    "\\nunrhd",
    "\\nuup",
    "\\nvDash",
    "\\nvLeftarrow",
    "\\nvLeftrightarrow",
    "\\nvRightarrow",
    "\\nvdash",
    "\\nvinfty",
    "\\nvleftarrow",
    "\\nvleftarrowtail",
    "\\nvleftrightarrow",
    "\\nvrightarrow",
    "\\nvrightarrowtail",
    "\\nvtwoheadleftarrow",
    "\\nvtwoheadleftarrowtail",
    "\\nvtwoheadrightarrow",
    "\\nvtwoheadrightarrowtail",
    "\\nwarrow",
    "\\nwovnearrow",
    "\\nwsearrow",
    "\\obar",
    "\\obeyspaces",
    "\\obot",
    "\\obrbrak",
    "\\obslash",
    "\\ocirc",
    "\\ocommatopright",
    "\\octothorpe",
    "\\oddsidemargin",
    "\\odiv",
    "\\odot",
    "\\odotslashdot",
    "\\oe",
    "\\oequal",
    "\\of",
    "\\offinterlineskip",
    "\\ogreaterthan",
    "\\oiiint",
    "\\oiint",
    "\\oint",
    "\\ointctrclockwise",
    "\\olcross",
    "\\oldstyle",
    "\\olessthan",
    "\\omega",
    "\\omegaup",
    "\\omicron",
    "\\ominus",
    "\\omit",
    "\\onecolumn",
    "\\onehalfspacing",
    "\\oneparcheckboxes",
    "\\oneparchoices",
    "\\only",
    "\\onlyenv",
    "\\onslide",
    "\\openbracketleft",
    "\\openbracketright",
    "\\openout",
    "\\operatorname",
    "\\operatornamewithlimits",
    "\\operp",
    "\\oplus",
    "\\opluslhrim",
    "\\oplusrhrim",
    "\\orange",
    "\\ordinarycolon",
    "\\original",
    "\\origof",
    "\\oslash",
    "\\otherlanguage",
    "\\otimes",
    "\\otimeshat",
    "\\otimeslhrim",
    "\\otimesrhrim",
    "\\oturnedcomma",
    "\\outerbarstrue",
    "\\outputpenalty",
    "\\ovalbox",
    "\\over",
    "\\overarc",
    "\\overbar",
    "\\overbrace",
    "\\overbracket",
    "\\overfullrule",
    "\\overgroup",
    "\\overlayarea",
    "\\overleftarrow",
    "\\overleftharpoon",
    "\\overleftrightarrow",
    "\\overline",
    "\\overlinesegment",
    "\\overparen",
    "\\overprint",
    "\\overrightarrow",
    "\\overrightharpoon",
    "\\overset",
    "\\ovhook",
    "\\owns",
    "\\pNiceArray",
    "\\pNiceMatrix",
    "\\pagebreak",
    "\\pagecolor",
    "\\pagelabel",
    "\\pagenumbering",
    "\\pageref",
    "\\pagestyle",
    "\\paperheight",
    "\\paperwidth",
    "\\par",
    "\\paragraph",
    "\\parallel",
    "\\parallelogram",
    "\\parallelogramblack",
    "\\parbox",
    "\\parfillskip",
    "\\parindent",
    "\\parsep",
    "\\parsim",
    "\\parskip",
    "\\part",
    "\\partial",
    "\\partialmeetcontraction",
    "\\partialup",
    "\\partlof",
    "\\partlot",
    "\\partopsep",
    "\\partpage",
    "\\parts",
    "\\parttoc",
    "\\patverse",
    "\\pause",
    "\\pausing",
    "\\pdfbookmark",
    "\\pdffalse",
    "\\pdfstringdef",
    "\\pdfstringdefDisableCommands",
    "\\pdftoppm",
    "\\pdftrue",
    "\\pencil",
    "\\pentagon",
    "\\pentagonblack",
    "\\percent",
    "\\period",
    "\\perp",
    "\\perps",
    "\\perspcorrespond",
    "\\perthousand",
    "\\pfun",
    "\\pgfplotsset",
    "\\phantom",
    "\\phantomsection",
    "\\phase",
    "\\phi",
    "\\phiup",
    "\\phone",
    "\\pi",
    "\\picture",
    "\\pinj",
    "\\pink",
    "\\pisces",
    "\\pitchfork",
    "\\piup",
    "\\pkg",
    "\\plasTeXregister",
    "\\plastexfalse",
    "\\plastextrue",
    "\\plfpagenumbers",
    "\\plfrule",
    "\\plftitle",
    "\\plim",
    "\\pltpagenumbers",
    "\\pltrule",
    "\\plttitle",
    "\\plus",
    "\\plusdot",
    "\\pluseqq",
    "\\plushat",
    "\\plusmn",
    "\\plussim",
    "\\plussubtwo",
    "\\plustrif",
    "\\pluto",
    "\\pm",
    "\\pmatrix",
    "\\pmb",
    "\\pmod",
    "\\pod",
    "\\pointformat",
    "\\pointint",
    "\\pointname",
    "\\pointpoints",
    "\\pointright",
    "\\postalmark",
    "\\postdisplaypenalty",
    "\\pounds",
    "\\prec",
    "\\precapprox",
    "\\preccurlyeq",
    "\\precedesnotsimilar",
    "\\preceq",
    "\\preceqq",
    "\\precnapprox",
    "\\precneq",
    "\\precneqq",
    "\\precnsim",
    "\\precsim",
    "\\predisplaypenalty",
    "\\predisplaysize",
    "\\preparecolor",
    "\\preparecolorset",
    "\\prescript",
    "\\pretolerance",
    "\\prime",
    "\\printbibliography",
    "\\printindex",
    "\\prod",
    "\\profline",
    "\\profsurf",
    "\\proglang",
    "\\project",
    "\\projlim",
    "\\proof",
    "\\proposition",
    "\\propto",
    "\\protect",
    "\\provideboolean",
    "\\providecolor",
    "\\providecolors",
    "\\providecolorset",
    "\\providecommand",
    "\\prurel",
    "\\psi",
    "\\psiup",
    "\\psmallmatrix",
    "\\psur",
    "\\psurj",
    "\\ptcpagenumbers",
    "\\ptcrule",
    "\\ptctitle",
    "\\pu",
    "\\pullback",
    "\\purple",
    "\\purpleA",
    "\\purpleB",
    "\\purpleC",
    "\\purpleD",
    "\\purpleE",
    "\\pushout",
    "\\qbeziermax",
    "\\qed",
    "\\qedhere",
    "\\qformat",
    "\\qoppa",
    "\\qprime",
    "\\qqtext",
    "\\qquad",
    "\\qty",
    "\\quad",
    "\\quarternote",
    "\\questeq",
    "\\question",
    "\\questions",
    "\\quotation",
    "\\quote",
    "\\quotedblbase",
    "\\quotesinglbase",
    "\\rAngle",
    "\\rArr",
    "\\rBrace",
    "\\rBrack",
    "\\rParen",
    "\\rVert",
    "\\radiation",
    "\\raggedbottom",
    "\\raggedleft",
    "\\raggedright",
    "\\raise",
    "\\raisebox",
    "\\rang",
    "\\rangle",
    "\\rangledot",
    "\\rangledownzigzagarrow",
    "\\rarr",
    "\\rasp",
    "\\ratio",
    "\\rawhtml",
    "\\rbag",
    "\\rblkbrbrak",
    "\\rblot",
    "\\rbrace",
    "\\rbracelend",
    "\\rbracemid",
    "\\rbraceuend",
    "\\rbrack",
    "\\rbrackextender",
    "\\rbracklend",
    "\\rbracklrtick",
    "\\rbrackubar",
    "\\rbrackuend",
    "\\rbrackurtick",
    "\\rbrbrak",
    "\\rcases",
    "\\rceil",
    "\\rcurvyangle",
    "\\rdiagovfdiag",
    "\\rdiagovsearrow",
    "\\real",
    "\\reals",
    "\\recorder",
    "\\recycle",
    "\\red",
    "\\redA",
    "\\redB",
    "\\redC",
    "\\redD",
    "\\redE",
    "\\ref",
    "\\refeq",
    "\\reflectbox",
    "\\refstepcounter",
    "\\rel",
    "\\relax",
    "\\relbar",
    "\\relpenalty",
    "\\remark",
    "\\removelastskip",
    "\\renewcommand",
    "\\renewenvironment",
    "\\renewgathered",
    "\\renewtagform",
    "\\repeat",
    "\\require",
    "\\resetcolorseries",
    "\\resetcounteronoverlays",
    "\\resetcountonoverlays",
    "\\resizebox",
    "\\restriction",
    "\\restylefloat",
    "\\revangle",
    "\\revangleubar",
    "\\revemptyset",
    "\\revequilibrium",
    "\\reversemarginpar",
    "\\revnmid",
    "\\rfbowtie",
    "\\rfloor",
    "\\rftimes",
    "\\rgathered",
    "\\rgbColor",
    "\\rgroup",
    "\\rhd",
    "\\rho",
    "\\rhoup",
    "\\right",
    "\\rightModels",
    "\\rightangle",
    "\\rightanglearc",
    "\\rightanglemdot",
    "\\rightanglesqr",
    "\\rightarrow",
    "\\rightarrowapprox",
    "\\rightarrowbackapprox",
    "\\rightarrowbar",
    "\\rightarrowbsimilar",
    "\\rightarrowdiamond",
    "\\rightarrowgtr",
    "\\rightarrowonoplus",
    "\\rightarrowplus",
    "\\rightarrowshortleftarrow",
    "\\rightarrowsimilar",
    "\\rightarrowsupset",
    "\\rightarrowtail",
    "\\rightarrowtriangle",
    "\\rightarrowx",
    "\\rightassert",
    "\\rightbarharpoon",
    "\\rightbkarrow",
    "\\rightbrace",
    "\\rightcurvedarrow",
    "\\rightdasharrow",
    "\\rightdbltail",
    "\\rightdotarrow",
    "\\rightdowncurvedarrow",
    "\\rightfishtail",
    "\\rightharpoonaccent",
    "\\rightharpoondown",
    "\\rightharpoondownbar",
    "\\rightharpoonsupdown",
    "\\rightharpoonup",
    "\\rightharpoonupbar",
    "\\rightharpoonupdash",
    "\\righthyphenmin",
    "\\rightimply",
    "\\rightleftarrow",
    "\\rightleftarrows",
    "\\rightleftharpoon",
    "\\rightleftharpoons",
    "\\rightleftharpoonsdown",
    "\\rightleftharpoonsup",
    "\\rightmargin",
    "\\rightmark",
    "\\rightmoon",
    "\\rightouterjoin",
    "\\rightparen",
    "\\rightpentagon",
    "\\rightpentagonblack",
    "\\rightrightarrows",
    "\\rightrightharpoons",
    "\\rightskip",
    "\\rightslice",
    "\\rightsquigarrow",
    "\\righttail",
    "\\rightthreearrows",
    "\\rightthreetimes",
    "\\rightturn",
    "\\rightupdownharpoon",
    "\\rightwavearrow",
    "\\rightwhitearrow",
    "\\rightzigzagarrow",
    "\\rimg",
    "\\ring",
    "\\ringplus",
    "\\risingdotseq",
    "\\rlap",
    "\\rm",
    "\\rmfamily",
    "\\rmoustache",
    "\\roman",
    "\\romannumeral",
    "\\root",
    "\\rootAtBottom",
    "\\rootAtTop",
    "\\rotatebox",
    "\\rparen",
    "\\rparenextender",
    "\\rparengtr",
    "\\rparenlend",
    "\\rparenuend",
    "\\rppolint",
    "\\rq",
    "\\rrangle",
    "\\rrbracket",
    "\\rres",
    "\\rrparenthesis",
    "\\rsolbar",
    "\\rsqhook",
    "\\rsub",
    "\\rtimes",
    "\\rtriltri",
    "\\rule",
    "\\ruledelayed",
    "\\rvboxline",
    "\\rvert",
    "\\rvzigzag",
    "\\sad",
    "\\sadface",
    "\\sagittarius",
    "\\sampi",
    "\\sansLmirrored",
    "\\sansLturned",
    "\\saturn",
    "\\savebox",
    "\\sbox",
    "\\sc",
    "\\scalebox",
    "\\scorpio",
    "\\scpolint",
    "\\scr",
    "\\scrB",
    "\\scrE",
    "\\scrF",
    "\\scrH",
    "\\scrI",
    "\\scrL",
    "\\scrM",
    "\\scrR",
    "\\scre",
    "\\scrg",
    "\\scriptscriptstyle",
    "\\scriptsize",
    "\\scriptspace",
    "\\scriptstyle",
    "\\scro",
    "\\scshape",
    "\\scurel",
    "\\sdef",
    "\\sdot",
    "\\searrow",
    "\\sec",
    "\\second",
    "\\sect",
    "\\section",
    "\\sectionmark",
    "\\sectionpage",
    "\\sectlof",
    "\\sectlot",
    "\\secttoc",
    "\\see",
    "\\seealso",
    "\\seename",
    "\\segment",
    "\\selectfont",
    "\\selectlanguage",
    "\\semi",
    "\\semicolon",
    "\\seovnearrow",
    "\\set",
    "\\setOptions",
    "\\setbeamercolor",
    "\\setbeamersize",
    "\\setbeamertemplate",
    "\\setboolean",
    "\\setcounter",
    "\\setlength",
    "\\setlipsumdefault",
    "\\setloglevel",
    "\\setlongtables",
    "\\setlrmarginsandblock",
    "\\setminus",
    "\\setstretch",
    "\\settodepth",
    "\\settoheight",
    "\\settowidth",
    "\\settrace",
    "\\sf",
    "\\sffamily",
    "\\sfrac",
    "\\sh",
    "\\shadowbox",
    "\\sharp",
    "\\shortcites",
    "\\shortdotswithin",
    "\\shortdowntack",
    "\\shortlefttack",
    "\\shortmid",
    "\\shortparallel",
    "\\shortrightarrowleftarrow",
    "\\shortuptack",
    "\\shortvdotswithin",
    "\\shoveleft",
    "\\shoveright",
    "\\show",
    "\\showboxbreadth",
    "\\showboxdepth",
    "\\showthe",
    "\\shuffle",
    "\\sideset",
    "\\sideways",
    "\\sigma",
    "\\sigmaup",
    "\\sim",
    "\\simcolon",
    "\\simcoloncolon",
    "\\simeq",
    "\\simgE",
    "\\simgtr",
    "\\similarleftarrow",
    "\\similarrightarrow",
    "\\simlE",
    "\\simless",
    "\\simminussim",
    "\\simneqq",
    "\\simplus",
    "\\simrdots",
    "\\sin",
    "\\sinewave",
    "\\singlespacing",
    "\\sinh",
    "\\sixptsize",
    "\\sixteenthnote",
    "\\skew",
    "\\skip",
    "\\skull",
    "\\sl",
    "\\slash",
    "\\slfpagenumbers",
    "\\slfrule",
    "\\slftitle",
    "\\sloppy",
    "\\sloppypar",
    "\\slshape",
    "\\sltpagenumbers",
    "\\sltrule",
    "\\slttitle",
    "\\small",
    "\\smallblacktriangleleft",
    "\\smallblacktriangleright",
    "\\smallbreak",
    "\\smallfrown",
    "\\smallin",
    "\\smallint",
    "\\smallintclockwise",
    "\\smallmatrix",
    "\\smallni",
    "\\smallointctrcclockwise",
    "\\smallowns",
    "\\smallsetminus",
    "\\smallskip",
    "\\smallskipamount",
    "\\smallsmile",
    "\\smalltriangledown",
    "\\smalltriangleleft",
    "\\smalltriangleright",
    "\\smalltriangleup",
    "\\smallvarointclockwise",
    "\\smash",
    "\\smashoperator",
    "\\smashtimes",
    "\\smblkcircle",
    "\\smblkdiamond",
    "\\smblklozenge",
    "\\smblksquare",
    "\\smeparsl",
    "\\smile",
    "\\smileface",
    "\\smiley",
    "\\smqty",
    "\\smt",
    "\\smte",
    "\\smwhitestar",
    "\\smwhtcircle",
    "\\smwhtdiamond",
    "\\smwhtlozenge",
    "\\smwhtsquare",
    "\\solbar",
    "\\sound",
    "\\sout",
    "\\space",
    "\\spaceskip",
    "\\spades",
    "\\spadesuit",
    "\\spadesuitopen",
    "\\spddot",
    "\\special",
    "\\sphat",
    "\\sphericalangle",
    "\\sphericalangleup",
    "\\split",
    "\\splitdfrac",
    "\\splitfrac",
    "\\splitmaxdepth",
    "\\splittopskip",
    "\\spot",
    "\\spreadlines",
    "\\sptilde",
    "\\sqangle",
    "\\sqcap",
    "\\sqcup",
    "\\sqint",
    "\\sqlozenge",
    "\\sqrint",
    "\\sqrt",
    "\\sqrtbottom",
    "\\sqsubset",
    "\\sqsubseteq",
    "\\sqsubsetneq",
    "\\sqsupset",
    "\\sqsupseteq",
    "\\sqsupsetneq",
    "\\square",
    "\\squarebotblack",
    "\\squarecrossfill",
    "\\squarehfill",
    "\\squarehvfill",
    "\\squareleftblack",
    "\\squarellblack",
    "\\squarellquad",
    "\\squarelrblack",
    "\\squarelrquad",
    "\\squareneswfill",
    "\\squarenwsefill",
    "\\squarerightblack",
    "\\squaretopblack",
    "\\squareulblack",
    "\\squareulquad",
    "\\squareurblack",
    "\\squareurquad",
    "\\squarevfill",
    "\\squoval",
    "\\ss",
    "\\sslash",
    "\\stackrel",
    "\\standardtilde",
    "\\star",
    "\\stareq",
    "\\starequal",
    "\\startdocument",
    "\\stcpagenumbers",
    "\\stcrule",
    "\\stctitle",
    "\\steaming",
    "\\stepcounter",
    "\\sterling",
    "\\stigma",
    "\\stretch",
    "\\strictfi",
    "\\strictif",
    "\\strikethrough",
    "\\strns",
    "\\structure",
    "\\structureenv",
    "\\strut",
    "\\style",
    "\\sub",
    "\\sube",
    "\\subedot",
    "\\subequations",
    "\\subfigure",
    "\\subfigurename",
    "\\subfloat",
    "\\subfloatname",
    "\\subject",
    "\\submult",
    "\\subparagraph",
    "\\subparts",
    "\\subpdfbookmark",
    "\\subrarr",
    "\\subref",
    "\\subsection",
    "\\subsectionpage",
    "\\subset",
    "\\subsetapprox",
    "\\subsetcirc",
    "\\subsetdot",
    "\\subseteq",
    "\\subseteqq",
    "\\subsetneq",
    "\\subsetneqq",
    "\\subsetplus",
    "\\subsim",
    "\\substack",
    "\\subsub",
    "\\subsubparagraph",
    "\\subsubparts",
    "\\subsubsection",
    "\\subsup",
    "\\subtable",
    "\\subtablename",
    "\\succ",
    "\\succapprox",
    "\\succcurlyeq",
    "\\succeq",
    "\\succeqq",
    "\\succnapprox",
    "\\succneq",
    "\\succneqq",
    "\\succnsim",
    "\\succsim",
    "\\sum",
    "\\sumbottom",
    "\\sumint",
    "\\sumtop",
    "\\sun",
    "\\sup",
    "\\supdsub",
    "\\supe",
    "\\supedot",
    "\\supereject",
    "\\suphsol",
    "\\suphsub",
    "\\suplarr",
    "\\supmult",
    "\\suppressfloats",
    "\\supset",
    "\\supsetapprox",
    "\\supsetcirc",
    "\\supsetdot",
    "\\supseteq",
    "\\supseteqq",
    "\\supsetneq",
    "\\supsetneqq",
    "\\supsetplus",
    "\\supsim",
    "\\supsub",
    "\\supsup",
    "\\surd",
    "\\surfintegral",
    "\\surj",
    "\\svmqty",
    "\\swapnumbers",
    "\\swarrow",
    "\\swords",
    "\\symbol",
    "\\sysaddeqsign",
    "\\sysalign",
    "\\sysautonum",
    "\\syscodeextracol",
    "\\sysdelim",
    "\\syseqivsign",
    "\\syseqsep",
    "\\syseqspace",
    "\\sysextracolonsign",
    "\\syslineskipcoeff",
    "\\sysremoveeqsign",
    "\\syssignspace",
    "\\syssubstitute",
    "\\systeme",
    "\\tabbing",
    "\\tabbingsep",
    "\\tabcolsep",
    "\\table",
    "\\tableofcontents",
    "\\tabskip",
    "\\tabular",
    "\\tabularx",
    "\\tabulary",
    "\\tag",
    "\\talloblong",
    "\\tan",
    "\\tanh",
    "\\tau",
    "\\taurus",
    "\\tauup",
    "\\tbinom",
    "\\tcmu",
    "\\tcohm",
    "\\tealA",
    "\\tealB",
    "\\tealC",
    "\\tealD",
    "\\tealE",
    "\\temporal",
    "\\texorpdfstring",
    "\\text",
    "\\textTheta",
    "\\textacutedbl",
    "\\textasciiacute",
    "\\textasciibreve",
    "\\textasciicaron",
    "\\textasciicircum",
    "\\textasciidieresis",
    "\\textasciigrave",
    "\\textasciimacron",
    "\\textasciitilde",
    "\\textasteriskcentered",
    "\\textbackslash",
    "\\textbaht",
    "\\textbar",
    "\\textbardbl",
    "\\textbf",
    "\\textbigcircle",
    "\\textblank",
    "\\textblock",
    "\\textborn",
    "\\textbraceleft",
    "\\textbraceright",
    "\\textbrokenbar",
    "\\textbullet",
    "\\textcelsius",
    "\\textcent",
    "\\textcentoldstyle",
    "\\textcircled",
    "\\textcircledP",
    "\\textclap",
    "\\textcolonmonetary",
    "\\textcolor",
    "\\textcompwordmark",
    "\\textcopyright",
    "\\textcurrency",
    "\\textdagger",
    "\\textdaggerdbl",
    "\\textdegree",
    "\\textdied",
    "\\textdiscount",
    "\\textdiv",
    "\\textdivorced",
    "\\textdollar",
    "\\textdollaroldstyle",
    "\\textdong",
    "\\textdoublepipe",
    "\\textdownarrow",
    "\\texteightoldstyle",
    "\\textellipsis",
    "\\textemdash",
    "\\textendash",
    "\\textestimated",
    "\\texteuro",
    "\\textexclamdown",
    "\\textfiveoldstyle",
    "\\textfloatsep",
    "\\textflorin",
    "\\textfouroldstyle",
    "\\textfrac",
    "\\textfraction",
    "\\textfractionsolidus",
    "\\textglotstop",
    "\\textgreater",
    "\\textguarani",
    "\\textheight",
    "\\texthvlig",
    "\\textindent",
    "\\textinterrobang",
    "\\textit",
    "\\textlangle",
    "\\textlbrackdbl",
    "\\textleftarrow",
    "\\textless",
    "\\textlira",
    "\\textllap",
    "\\textlnot",
    "\\textmarried",
    "\\textmd",
    "\\textmho",
    "\\textmu",
    "\\textmusicalnote",
    "\\textnaira",
    "\\textnineoldstyle",
    "\\textnormal",
    "\\textnrleg",
    "\\textnumero",
    "\\textogonekcentered",
    "\\textohm",
    "\\textonehalf",
    "\\textoneoldstyle",
    "\\textonequarter",
    "\\textonesuperior",
    "\\textopenbullet",
    "\\textordfeminine",
    "\\textordmasculine",
    "\\textparagraph",
    "\\textpercent",
    "\\textperiodcentered",
    "\\textpertenthousand",
    "\\textperthousand",
    "\\textpeso",
    "\\textphi",
    "\\textpm",
    "\\textquestiondown",
    "\\textquotedbl",
    "\\textquotedblleft",
    "\\textquotedblright",
    "\\textquoteleft",
    "\\textquoteright",
    "\\textquotesingle",
    "\\textrangle",
    "\\textrbrackdbl",
    "\\textrecipe",
    "\\textreferencemark",
    "\\textregistered",
    "\\textrightarrow",
    "\\textrlap",
    "\\textrm",
    "\\textsc",
    "\\textschwa",
    "\\textsection",
    "\\textservicemark",
    "\\textsevenoldstyle",
    "\\textsf",
    "\\textsixoldstyle",
    "\\textsl",
    "\\textsterling",
    "\\textstyle",
    "\\textsubscript",
    "\\textsuperscript",
    "\\textsurd",
    "\\texttheta",
    "\\textthreeoldstyle",
    "\\textthreequarters",
    "\\textthreesuperior",
    "\\texttildelow",
    "\\texttimes",
    "\\texttrademark",
    "\\texttt",
    "\\textturnk",
    "\\texttwooldstyle",
    "\\texttwosuperior",
    "\\textunderscore",
    "\\textup",
    "\\textuparrow",
    "\\textvartheta",
    "\\textvisiblespace",
    "\\textwidth",
    "\\textwon",
    "\\textyen",
    "\\textzerooldstyle",
    "\\tfrac",
    "\\tfun",
    "\\tg",
    "\\th",
    "\\thanks",
    "\\the",
    "\\thealso",
    "\\thebibliography",
    "\\thecounter",
    "\\thehypertarget",
    "\\theindex",
    "\\theorem",
    "\\theoremstyle",
    "\\therefore",
    "\\thermod",
    "\\thesee",
    "\\theta",
    "\\thetasym",
    "\\thetaup",
    "\\thickapprox",
    "\\thickmuskip",
    "\\thicksim",
    "\\thickspace",
    "\\thinmuskip",
    "\\thinspace",
    "\\third",
    "\\thispagestyle",
    "\\thispdfpagelabel",
    "\\thorn",
    "\\threedangle",
    "\\threedotcolon",
    "\\threeunderdot",
    "\\tieconcat",
    "\\tieinfty",
    "\\tightlist",
    "\\tightmtcfalse",
    "\\tightmtctrue",
    "\\tikzcd",
    "\\tikzpicture",
    "\\tikzset",
    "\\tilde",
    "\\tildetrpl",
    "\\time",
    "\\times",
    "\\timesbar",
    "\\tinj",
    "\\tiny",
    "\\title",
    "\\titledquestion",
    "\\titlegraphic",
    "\\titlepage",
    "\\titleref",
    "\\tminus",
    "\\tmspace",
    "\\to",
    "\\todo",
    "\\toea",
    "\\toks",
    "\\tolerance",
    "\\tona",
    "\\tone",
    "\\top",
    "\\topbot",
    "\\topcir",
    "\\topfork",
    "\\topfraction",
    "\\topglue",
    "\\topmargin",
    "\\topsemicircle",
    "\\topsep",
    "\\topskip",
    "\\tosa",
    "\\totalformat",
    "\\towa",
    "\\tplus",
    "\\tracingcommands",
    "\\tracinglostchars",
    "\\tracingmacros",
    "\\tracingonline",
    "\\tracingoutput",
    "\\tracingpages",
    "\\tracingparagraphs",
    "\\tracingrestores",
    "\\tracingstats",
    "\\transblindshorizontal",
    "\\transblindsvertical",
    "\\transboxin",
    "\\transboxout",
    "\\transdissolve",
    "\\transduration",
    "\\transglitter",
    "\\transsplithorizontalin",
    "\\transsplithorizontalout",
    "\\transsplitverticalin",
    "\\transsplitverticalout",
    "\\transwipe",
    "\\trapezium",
    "\\triangle",
    "\\trianglecdot",
    "\\triangledown",
    "\\triangleeq",
    "\\triangleleft",
    "\\triangleleftblack",
    "\\trianglelefteq",
    "\\triangleminus",
    "\\triangleodot",
    "\\triangleplus",
    "\\triangleq",
    "\\triangleright",
    "\\trianglerightblack",
    "\\trianglerighteq",
    "\\triangles",
    "\\triangleserifs",
    "\\triangletimes",
    "\\triangleubar",
    "\\tripledash",
    "\\tripleplus",
    "\\trivlist",
    "\\trprime",
    "\\trslash",
    "\\truestate",
    "\\tstrok",
    "\\tsur",
    "\\tt",
    "\\ttfamily",
    "\\turnangle",
    "\\turnediota",
    "\\turnednot",
    "\\twocaps",
    "\\twocolumn",
    "\\twocups",
    "\\twoheaddownarrow",
    "\\twoheadleftarrow",
    "\\twoheadleftarrowtail",
    "\\twoheadleftdbkarrow",
    "\\twoheadmapsfrom",
    "\\twoheadmapsto",
    "\\twoheadrightarrow",
    "\\twoheadrightarrowtail",
    "\\twoheaduparrow",
    "\\twoheaduparrowcircle",
    "\\twolowline",
    "\\twonotes",
    "\\typecolon",
    "\\typein",
    "\\typeout",
    "\\uArr",
    "\\uarr",
    "\\ubrbrak",
    "\\uchyph",
    "\\uhblk",
    "\\ularc",
    "\\ulblacktriangle",
    "\\ulcorner",
    "\\ulcrop",
    "\\ultriangle",
    "\\uminus",
    "\\unboldmath",
    "\\uncover",
    "\\uncoverenv",
    "\\undefined",
    "\\underbar",
    "\\underbrace",
    "\\underbracket",
    "\\undergroup",
    "\\underleftarrow",
    "\\underleftharpoondown",
    "\\underleftrightarrow",
    "\\underline",
    "\\underlinesegment",
    "\\underparen",
    "\\underrightarrow",
    "\\underrightharpoondown",
    "\\underset",
    "\\undottedmtcfalse",
    "\\undottedmtctrue",
    "\\unicode",
    "\\unicodecdots",
    "\\unicodeellipsis",
    "\\unitlength",
    "\\unlhd",
    "\\unrhd",
    "\\upAlpha",
    "\\upBeta",
    "\\upChi",
    "\\upDelta",
    "\\upDigamma",
    "\\upEpsilon",
    "\\upEta",
    "\\upGamma",
    "\\upIota",
    "\\upKappa",
    "\\upKoppa",
    "\\upLambda",
    "\\upMu",
    "\\upNu",
    "\\upOmega",
    "\\upOmicron",
    "\\upPhi",
    "\\upPi",
    "\\upPsi",
    "\\upRho",
    "\\upSampi",
    "\\upSigma",
    "\\upStigma",
    "\\upTau",
    "\\upTheta",
    "\\upUpsilon",
    "\\upXi",
    "\\upZeta",
    "\\upalpha",
    "\\upand",
    "\\uparrow",
    "\\uparrowbarred",
    "\\uparrowdownarrow",
    "\\uparrowoncircle",
    "\\upbackepsilon",
    "\\upbeta",
    "\\upchi",
    "\\updasharrow",
    "\\updelta",
    "\\updigamma",
    "\\updownarrow",
    "\\updownarrowbar",
    "\\updownarrows",
    "\\updownharpoonleftleft",
    "\\updownharpoonleftright",
    "\\updownharpoonrightleft",
    "\\updownharpoonrightright",
    "\\updownharpoons",
    "\\updownharpoonsleftright",
    "\\upepsilon",
    "\\upequilibrium",
    "\\upeta",
    "\\upfishtail",
    "\\upgamma",
    "\\upharpoonleft",
    "\\upharpoonleftbar",
    "\\upharpoonleftdown",
    "\\upharpoonleftup",
    "\\upharpoonright",
    "\\upharpoonrightbar",
    "\\upharpoonrightdown",
    "\\upharpoonrightup",
    "\\upharpoonsleftright",
    "\\upin",
    "\\upint",
    "\\upiota",
    "\\upkappa",
    "\\upkoppa",
    "\\uplambda",
    "\\uplevel",
    "\\uplus",
    "\\upmu",
    "\\upnu",
    "\\upoldKoppa",
    "\\upoldkoppa",
    "\\upomega",
    "\\upomicron",
    "\\uppercase",
    "\\upphi",
    "\\uppi",
    "\\uppsi",
    "\\uprevequilibrium",
    "\\uprho",
    "\\uprightcurvearrow",
    "\\uproot",
    "\\upsampi",
    "\\upshape",
    "\\upsigma",
    "\\upsilon",
    "\\upsilonup",
    "\\upslopeellipsis",
    "\\upstigma",
    "\\uptau",
    "\\uptheta",
    "\\upuparrows",
    "\\upupharpoons",
    "\\upupsilon",
    "\\upvarTheta",
    "\\upvarbeta",
    "\\upvarepsilon",
    "\\upvarkappa",
    "\\upvarphi",
    "\\upvarpi",
    "\\upvarrho",
    "\\upvarsigma",
    "\\upvartheta",
    "\\upwhitearrow",
    "\\upxi",
    "\\upzeta",
    "\\uranus",
    "\\urarc",
    "\\urblacktriangle",
    "\\urcorner",
    "\\urcrop",
    "\\url",
    "\\urladdr",
    "\\urldef",
    "\\urlstyle",
    "\\urtriangle",
    "\\useAllTwocells",
    "\\useTwocells",
    "\\usebeamercolor",
    "\\usebeamertemplate",
    "\\usebox",
    "\\usecolortheme",
    "\\usecounter",
    "\\usefonttheme",
    "\\useinnertheme",
    "\\useoutertheme",
    "\\usepackage",
    "\\usetagform",
    "\\usetheme",
    "\\usetikzlibrary",
    "\\utilde",
    "\\vBar",
    "\\vBarv",
    "\\vDash",
    "\\vDdash",
    "\\vNiceArray",
    "\\vNiceMatrix",
    "\\value",
    "\\varDelta",
    "\\varEarth",
    "\\varGamma",
    "\\varLambda",
    "\\varOmega",
    "\\varPhi",
    "\\varPi",
    "\\varPsi",
    "\\varSigma",
    "\\varTheta",
    "\\varUpsilon",
    "\\varVdash",
    "\\varXi",
    "\\varbarwedge",
    "\\varbeta",
    "\\varcarriagereturn",
    "\\varclub",
    "\\varclubsuit",
    "\\varcoppa",
    "\\vardiamond",
    "\\vardiamondsuit",
    "\\vardoublebarwedge",
    "\\varepsilon",
    "\\varepsilonup",
    "\\varheart",
    "\\varheartsuit",
    "\\varhexagon",
    "\\varhexagonblack",
    "\\varhexagonlrbonds",
    "\\varinjlim",
    "\\varisinobar",
    "\\varisins",
    "\\varkappa",
    "\\varliminf",
    "\\varlimsup",
    "\\varlrtriangle",
    "\\varniobar",
    "\\varnis",
    "\\varnothing",
    "\\varointclockwise",
    "\\varparallel",
    "\\varperspcorrespond",
    "\\varphi",
    "\\varphiup",
    "\\varpi",
    "\\varpiup",
    "\\varprod",
    "\\varprojlim",
    "\\varpropto",
    "\\varrho",
    "\\varrhoup",
    "\\varsdef",
    "\\varsigma",
    "\\varsigmaup",
    "\\varspade",
    "\\varspadesuit",
    "\\varstar",
    "\\varsubsetneq",
    "\\varsubsetneqq",
    "\\varsupsetneq",
    "\\varsupsetneqq",
    "\\vartheta",
    "\\varthetaup",
    "\\vartriangle",
    "\\vartriangleleft",
    "\\vartriangleright",
    "\\varvdots",
    "\\varveebar",
    "\\vb",
    "\\vbadness",
    "\\vbox",
    "\\vbraceextender",
    "\\vbrtri",
    "\\vcentcolon",
    "\\vcenter",
    "\\vdash",
    "\\vdot",
    "\\vdots",
    "\\vdotswithin",
    "\\vec",
    "\\vectimes",
    "\\vee",
    "\\veebar",
    "\\veedot",
    "\\veedoublebar",
    "\\veeeq",
    "\\veemidvert",
    "\\veeodot",
    "\\veeonvee",
    "\\veeonwedge",
    "\\venus",
    "\\verb",
    "\\verbatim",
    "\\verbatiminput",
    "\\verse",
    "\\vert",
    "\\vertoverlay",
    "\\verymuchgreater",
    "\\verymuchless",
    "\\vfill",
    "\\vfuzz",
    "\\vglue",
    "\\viewdata",
    "\\virgo",
    "\\visible",
    "\\visibleenv",
    "\\vlongdash",
    "\\vmatrix",
    "\\vmqty",
    "\\vnabla",
    "\\voffset",
    "\\volintegral",
    "\\vphantom",
    "\\vrectangle",
    "\\vrectangleblack",
    "\\vsize",
    "\\vskip",
    "\\vsmallmatrix",
    "\\vspace",
    "\\vysmblkcircle",
    "\\vysmblksquare",
    "\\vysmwhtcircle",
    "\\vysmwhtsquare",
    "\\vzigzag",
    "\\warning",
    "\\wasylozenge",
    "\\wasytherefore",
    "\\waveColor",
    "\\wedge",
    "\\wedgebar",
    "\\wedgedot",
    "\\wedgedoublebar",
    "\\wedgemidvert",
    "\\wedgeodot",
    "\\wedgeonwedge",
    "\\wedgeq",
    "\\weierp",
    "\\whiledo",
    "\\whitearrowupfrombar",
    "\\whiteinwhitetriangle",
    "\\whitepointerleft",
    "\\whitepointerright",
    "\\whitesquaretickleft",
    "\\whitesquaretickright",
    "\\whthorzoval",
    "\\whtvertoval",
    "\\wideangledown",
    "\\wideangleup",
    "\\widebar",
    "\\widebridgeabove",
    "\\widecheck",
    "\\widehat",
    "\\wideparen",
    "\\widetilde",
    "\\wideutilde",
    "\\widowpenalty",
    "\\wp",
    "\\wr",
    "\\wrapfigure",
    "\\wraptable",
    "\\write",
    "\\xLeftarrow",
    "\\xLeftrightarrow",
    "\\xRightarrow",
    "\\xalignat",
    "\\xbsol",
    "\\xcancel",
    "\\xdef",
    "\\xhookleftarrow",
    "\\xhookrightarrow",
    "\\xhtml",
    "\\xi",
    "\\xiup",
    "\\xleftarrow",
    "\\xleftequilibrium",
    "\\xleftharpoondown",
    "\\xleftharpoonup",
    "\\xleftrightarrow",
    "\\xleftrightharpoons",
    "\\xlongequal",
    "\\xmapsto",
    "\\xmat",
    "\\xmathstrut",
    "\\xrightarrow",
    "\\xrightequilibrium",
    "\\xrightharpoondown",
    "\\xrightharpoonup",
    "\\xrightleftarrows",
    "\\xrightleftharpoons",
    "\\xsol",
    "\\xspaceskip",
    "\\xtofrom",
    "\\xtwoheadleftarrow",
    "\\xtwoheadrightarrow",
    "\\xymatrix",
    "\\xymatrixC",
    "\\xymatrixH",
    "\\xymatrixL",
    "\\xymatrixM",
    "\\xymatrixR",
    "\\xymatrixW",
    "\\xyoption",
    "\\year",
    "\\yen",
    "\\yinyang",
    "\\zcmp",
    "\\zeta",
    "\\zetaup",
    "\\zhide",
    "\\zpipe",
    "\\zproject",
};

}  // namespace webcurate::math
